"""Elementary number theory over the additive group Z_m.

Everything here is plain integer arithmetic: greatest common divisors,
linear congruences with unit coefficient, additive orders, and the unit
residues that generate (Z_m, +).  Negative arguments to the congruence
solvers are reduced mod m first.
"""

from math import gcd

from .errors import NoInverseError, NoUniqueSolutionError

__all__ = [
    "gcd_all",
    "solve_linear_congruence",
    "additive_order",
    "unit_residues",
    "mod_inverse",
]


def _check_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")


def gcd_all(values) -> int:
    """Greatest common divisor of a nonempty sequence of positive integers."""
    values = list(values)
    if not values:
        raise ValueError("gcd_all needs at least one value")
    for v in values:
        if v < 1:
            raise ValueError(f"gcd_all expects positive integers, got {v}")
    return gcd(*values)


def mod_inverse(b: int, m: int) -> int:
    """The unique x in [0, m) with b*x = 1 (mod m); requires gcd(b, m) = 1."""
    _check_modulus(m)
    try:
        return pow(b % m, -1, m)
    except ValueError:
        raise NoInverseError(f"{b} has no inverse mod {m}: gcd is {gcd(b, m)}") from None


def solve_linear_congruence(b: int, a: int, m: int) -> int:
    """Solve b*x = a (mod m) when the solution is unique.

    Unique solvability is equivalent to gcd(b, m) = 1; anything else raises
    NoUniqueSolutionError rather than guessing among gcd(b, m) solutions.
    """
    _check_modulus(m)
    b %= m
    a %= m
    if gcd(b, m) != 1:
        raise NoUniqueSolutionError(
            f"{b}x = {a} (mod {m}) has no unique solution: gcd({b}, {m}) = {gcd(b, m)}"
        )
    return (a * pow(b, -1, m)) % m


def additive_order(k: int, m: int) -> int:
    """Order of the residue k in (Z_m, +): m / gcd(m, k), and 1 for k = 0."""
    _check_modulus(m)
    k %= m
    if k == 0:
        return 1
    return m // gcd(m, k)


def unit_residues(m: int) -> list:
    """All g in [1, m) with gcd(g, m) = 1, ascending.

    These are exactly the additive generators of (Z_m, +).
    """
    _check_modulus(m)
    return [g for g in range(1, m) if gcd(g, m) == 1]
