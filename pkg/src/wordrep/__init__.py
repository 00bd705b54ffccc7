"""Word-representability toolkit for 5-regular circulant graphs.

Builds representing words, coloring-based semi-transitivity certificates,
normalizations, and Cartesian factorizations for circulants of the shape
C_2n(a, b, n), and cross-checks every certificate against independent
exhaustive oracles at small scale.
"""

__version__ = "0.1.0"
