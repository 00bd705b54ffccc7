"""Coloring-based semi-transitivity certificates for C_2n(a, b, n).

Each scheme packages a proper coloring together with an acyclic tournament
on the colors; orienting every edge along the tournament gives an acyclic
orientation, and the certificate is accepted only after the induced
orientation is machine-checked to be shortcut-free.  Nothing is trusted:
properness, the homomorphism condition, acyclicity, and shortcut-freeness
are all re-verified per instance, and a failure raises
CertificateFailureError carrying the offending evidence.

Scheme summary (m = 2n, unit-jump schemes expect jumps (1, x, n)):
  mod3              3 divides none of a, b, m-a, m-b, n; color = j mod 3
  generator_blocks  some unit g has r = min(p, q, m-p, m-q) >= ceil(m/3)
                    where a = p*g, b = q*g; three blocks of the g-ordering
  nx2               n = x = 2 (mod 3); mod-3 classes, vertex m-1 recolored
  nx0               n = x = 0 (mod 3), 3x > m; shifted mod-3 classes on
                    blocks [0,x), [x,2x), [2x,m)
  n0x1              n = 0, x = 1 (mod 3), 2x < n; blocks [0,n), [n,m-x),
                    [m-x,m)
  n0x2              n = 0, x = 2 (mod 3), 2 < x, 2x < n; same blocks,
                    twisted class shifts, vertices n, m-x, m-1 recolored
  n1x2              n = 1, x = 2 (mod 3), 2 < x, 2x < n; six colors over
                    blocks [0,m-x) and [m-x,m)
  n2x1              n = 2, x = 1 (mod 3), 2x < n; as n1x2 with a different
                    tournament
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import CertificateFailureError, HomomorphismError, SchemeNotApplicableError
from .graph import CirculantSpec, Graph, build_circulant, five_regular_spec
from .numtheory import mod_inverse, unit_residues
from .orientation import Orientation, find_shortcut, orient_by_color_order

__all__ = [
    "ALL_SCHEMES",
    "ColoringCertificate",
    "applicable_schemes",
    "build_coloring",
    "verify_proper",
    "verify_certificate",
    "certificate_json",
]

ALL_SCHEMES = (
    "mod3",
    "generator_blocks",
    "nx2",
    "nx0",
    "n0x1",
    "n0x2",
    "n1x2",
    "n2x1",
)

# color ids: c0, c1, c2 = 0, 1, 2; the extra color c3 = 3; d0, d1, d2 = 3, 4, 5
_LINEAR_DAG_ORDER = (0, 1, 2)
_K4_DAG_ORDER = (0, 3, 2, 1)
_K6_N1X2_ORDER = (3, 0, 5, 2, 4, 1)  # d0, c0, d2, c2, d1, c1
_K6_N2X1_ORDER = (3, 0, 4, 1, 5, 2)  # d0, c0, d1, c1, d2, c2


def _tournament(order: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(
        (order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order))
    )


@dataclass(frozen=True)
class ColoringCertificate:
    spec: CirculantSpec
    colors: Tuple[int, ...]
    color_dag: Tuple[Tuple[int, int], ...]
    scheme: str


def _split_spec(spec: CirculantSpec):
    if len(spec.jumps) != 3 or spec.n_vertices != 2 * spec.jumps[-1]:
        raise SchemeNotApplicableError(f"{spec} is not of the 5-regular shape (2n, (a, b, n))")
    a, b, n = spec.jumps
    five_regular_spec(n, a, b)
    return n, a, b


def _generator_choice(n: int, a: int, b: int):
    """Smallest unit g with min(p, q, 2n-p, 2n-q) >= ceil(2n/3), if any."""
    m = 2 * n
    need = -(-m // 3)
    for g in unit_residues(m):
        inv = mod_inverse(g, m)
        p = a * inv % m
        q = b * inv % m
        r = min(p, q, m - p, m - q)
        if r >= need:
            return g, p, q, r
    return None


def applicable_schemes(n: int, a: int, b: int) -> List[str]:
    """All schemes whose hypotheses hold for C_2n(a, b, n), in fixed order.

    The six unit-jump schemes are evaluated only when the spec is already in
    the form (2n, (1, x, n)); normalize first otherwise.
    """
    five_regular_spec(n, a, b)
    m = 2 * n
    out = []
    if all(v % 3 != 0 for v in (a, b, m - a, m - b, n)):
        out.append("mod3")
    if _generator_choice(n, a, b) is not None:
        out.append("generator_blocks")
    if a == 1:
        x = b
        if n % 3 == 2 and x % 3 == 2:
            out.append("nx2")
        if n % 3 == 0 and x % 3 == 0 and 3 * x > m:
            out.append("nx0")
        if n % 3 == 0 and x % 3 == 1 and 2 * x < n:
            out.append("n0x1")
        if n % 3 == 0 and x % 3 == 2 and 2 < x < n and 2 * x < n:
            out.append("n0x2")
        if n % 3 == 1 and x % 3 == 2 and 2 < x < n and 2 * x < n:
            out.append("n1x2")
        if n % 3 == 2 and x % 3 == 1 and 2 * x < n:
            out.append("n2x1")
    return out


def _require(cond: bool, scheme: str, detail: str):
    if not cond:
        raise SchemeNotApplicableError(f"{scheme}: {detail}")


def _unit_x(spec: CirculantSpec, scheme: str) -> int:
    n, a, b = _split_spec(spec)
    _require(a == 1, scheme, f"needs the unit-jump form (2n, (1, x, n)), got jumps {spec.jumps}")
    return b


def _colors_mod3(spec: CirculantSpec):
    n, a, b = _split_spec(spec)
    m = 2 * n
    _require(
        all(v % 3 != 0 for v in (a, b, m - a, m - b, n)),
        "mod3",
        f"3 divides one of a={a}, b={b}, 2n-a={m - a}, 2n-b={m - b}, n={n}",
    )
    return tuple(j % 3 for j in range(m)), _tournament(_LINEAR_DAG_ORDER)


def _colors_generator_blocks(spec: CirculantSpec):
    n, a, b = _split_spec(spec)
    m = 2 * n
    choice = _generator_choice(n, a, b)
    _require(choice is not None, "generator_blocks", f"no unit g reaches r >= ceil({m}/3)")
    g, p, q, r = choice
    colors = [0] * m
    for k in range(m):
        colors[k * g % m] = 0 if k < r else (1 if k < 2 * r else 2)
    return tuple(colors), _tournament(_LINEAR_DAG_ORDER)


def _colors_nx2(spec: CirculantSpec):
    x = _unit_x(spec, "nx2")
    n = spec.jumps[-1]
    m = 2 * n
    _require(n % 3 == 2 and x % 3 == 2, "nx2", f"needs n = x = 2 (mod 3), got n={n}, x={x}")
    colors = [j % 3 for j in range(m)]
    colors[m - 1] = 3
    return tuple(colors), _tournament(_K4_DAG_ORDER)


def _block_shift_colors(m: int, bounds, shifts):
    """Color j by (j mod 3 + shift of its block) mod 3, blocks by right bounds."""
    colors = []
    for j in range(m):
        for right, shift in zip(bounds, shifts):
            if j < right:
                colors.append((j % 3 + shift) % 3)
                break
    return colors


def _colors_nx0(spec: CirculantSpec):
    x = _unit_x(spec, "nx0")
    n = spec.jumps[-1]
    m = 2 * n
    _require(
        n % 3 == 0 and x % 3 == 0 and 3 * x > m,
        "nx0",
        f"needs n = x = 0 (mod 3) and x > 2n/3, got n={n}, x={x}",
    )
    colors = _block_shift_colors(m, (x, 2 * x, m), (0, 1, 2))
    return tuple(colors), _tournament(_LINEAR_DAG_ORDER)


def _colors_n0x1(spec: CirculantSpec):
    x = _unit_x(spec, "n0x1")
    n = spec.jumps[-1]
    m = 2 * n
    _require(
        n % 3 == 0 and x % 3 == 1 and 2 * x < n,
        "n0x1",
        f"needs n = 0, x = 1 (mod 3) and x < n/2, got n={n}, x={x}",
    )
    colors = _block_shift_colors(m, (n, m - x, m), (0, 1, 2))
    return tuple(colors), _tournament(_LINEAR_DAG_ORDER)


def _colors_n0x2(spec: CirculantSpec):
    x = _unit_x(spec, "n0x2")
    n = spec.jumps[-1]
    m = 2 * n
    _require(
        n % 3 == 0 and x % 3 == 2 and 2 < x and 2 * x < n,
        "n0x2",
        f"needs n = 0, x = 2 (mod 3) and 2 < x < n/2, got n={n}, x={x}",
    )
    colors = _block_shift_colors(m, (n, m - x, m), (0, 2, 1))
    for v in (n, m - x, m - 1):
        colors[v] = 3
    return tuple(colors), _tournament(_K4_DAG_ORDER)


def _colors_two_block_six(spec: CirculantSpec, scheme: str, order):
    x = _unit_x(spec, scheme)
    n = spec.jumps[-1]
    m = 2 * n
    colors = [(j % 3) if j < m - x else (3 + j % 3) for j in range(m)]
    return tuple(colors), _tournament(order)


def _colors_n1x2(spec: CirculantSpec):
    x = _unit_x(spec, "n1x2")
    n = spec.jumps[-1]
    _require(
        n % 3 == 1 and x % 3 == 2 and 2 < x and 2 * x < n,
        "n1x2",
        f"needs n = 1, x = 2 (mod 3) and 2 < x < n/2, got n={n}, x={x}",
    )
    return _colors_two_block_six(spec, "n1x2", _K6_N1X2_ORDER)


def _colors_n2x1(spec: CirculantSpec):
    x = _unit_x(spec, "n2x1")
    n = spec.jumps[-1]
    _require(
        n % 3 == 2 and x % 3 == 1 and 2 * x < n,
        "n2x1",
        f"needs n = 2, x = 1 (mod 3) and x < n/2, got n={n}, x={x}",
    )
    return _colors_two_block_six(spec, "n2x1", _K6_N2X1_ORDER)


_BUILDERS = {
    "mod3": _colors_mod3,
    "generator_blocks": _colors_generator_blocks,
    "nx2": _colors_nx2,
    "nx0": _colors_nx0,
    "n0x1": _colors_n0x1,
    "n0x2": _colors_n0x2,
    "n1x2": _colors_n1x2,
    "n2x1": _colors_n2x1,
}


def verify_proper(g: Graph, colors: Sequence[int]):
    """(True, []) for a proper coloring, else (False, monochromatic edges)."""
    if len(colors) != g.n or any(c is None for c in colors):
        raise ValueError(f"coloring must assign every vertex of 0..{g.n - 1} a color")
    bad = [(u, v) for u, v in g.sorted_edges() if colors[u] == colors[v]]
    return not bad, bad


def verify_certificate(cert: ColoringCertificate) -> Orientation:
    """Re-check a certificate from scratch; returns the induced orientation.

    Checks, in order: properness, the homomorphism condition into the color
    dag, acyclicity of the induced orientation, and shortcut-freeness.
    """
    g = build_circulant(cert.spec)
    ok, bad = verify_proper(g, cert.colors)
    if not ok:
        raise CertificateFailureError(
            f"{cert.scheme} coloring of {cert.spec} has monochromatic edges", evidence=bad
        )
    try:
        oriented = orient_by_color_order(g, cert.colors, cert.color_dag)
    except HomomorphismError as exc:
        raise CertificateFailureError(
            f"{cert.scheme} coloring of {cert.spec} is not a homomorphism: {exc}"
        ) from exc
    witness = find_shortcut(oriented)  # also asserts acyclicity
    if witness is not None:
        raise CertificateFailureError(
            f"{cert.scheme} orientation of {cert.spec} contains a shortcut",
            evidence=witness,
        )
    return oriented


def build_coloring(spec: CirculantSpec, scheme: str) -> ColoringCertificate:
    """Build and fully verify the scheme's certificate for this spec."""
    if scheme not in _BUILDERS:
        raise ValueError(f"unknown scheme {scheme!r}; pick one of {ALL_SCHEMES}")
    colors, dag = _BUILDERS[scheme](spec)
    cert = ColoringCertificate(spec, colors, dag, scheme)
    verify_certificate(cert)
    return cert


def certificate_json(cert: ColoringCertificate, verified: bool = True) -> dict:
    return {
        "scheme": cert.scheme,
        "n": cert.spec.n_vertices,
        "jumps": list(cert.spec.jumps),
        "colors": list(cert.colors),
        "color_dag": [list(e) for e in cert.color_dag],
        "verified": verified,
    }
