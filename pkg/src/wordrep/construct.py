"""Word constructions, reductions, factorizations, and the master classifier.

Certificates come in several currencies: explicit representing words built
by vertex morphisms, coloring certificates, semi-transitive orientations,
and Cartesian factorizations into smaller circulants.  The classifier tries
them in a fixed order (words first, search last) and machine-verifies every
certificate before reporting it; a Representable verdict never rests on an
unchecked construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from . import coloring as coloring_mod
from .errors import (
    CertificateFailureError,
    ConstructionBugError,
    DisconnectedError,
    NotFactorizableError,
    NotNormalizableError,
    PreconditionError,
    SchemeNotApplicableError,
)
from .graph import (
    CirculantSpec,
    build_circulant,
    cartesian_product,
    check_isomorphism_by_map,
    complete_graph,
    component_decomposition,
    five_regular_spec,
    normalize_to_unit_jump,
)
from .numtheory import mod_inverse
from .orientation import (
    DEFAULT_SEARCH_BUDGET,
    FOUND,
    NOT_REPRESENTABLE,
    Orientation,
    is_semi_transitive,
    search_semi_transitive,
)
from .words import represents, uniformity

__all__ = [
    "MORPHISM_SCHEMES",
    "REPRESENTABLE",
    "NOT_REPRESENTABLE_VERDICT",
    "UNKNOWN",
    "WordCertificate",
    "Factorization",
    "PrismReduction",
    "FamilyCondition",
    "ComponentReduction",
    "ClassificationResult",
    "build_word_morphism",
    "parity_classify",
    "factorize_5regular",
    "rep_bound_from_factorization",
    "non_representable_family",
    "classify",
    "verify_classification",
    "classification_json",
]

REPRESENTABLE = "representable"
NOT_REPRESENTABLE_VERDICT = "not_representable"
UNKNOWN = "unknown"

MORPHISM_SCHEMES = ("x2", "half", "half_to_two_thirds")

# factor-verification searches are tiny; cap them separately from the caller budget
_FACTOR_BUDGET = 2_000_000


@dataclass(frozen=True)
class WordCertificate:
    """A representing word for build_circulant(spec)."""

    spec: CirculantSpec
    word: Tuple[int, ...]

    @property
    def uniform(self) -> Optional[int]:
        return uniformity(self.word)


@dataclass(frozen=True)
class Factorization:
    """C_pq(T) as C_p(R) box C_q(S) with T = q*R union p*S and d = 1."""

    p: int
    q: int
    r_jumps: Tuple[int, ...]
    s_jumps: Tuple[int, ...]
    d: int
    vmap: Tuple[int, ...]


@dataclass(frozen=True)
class PrismReduction:
    """C_2n(a, b, n) as P_2 box C_n(a/2, b/2) for odd n, even a and b."""

    inner: CirculantSpec
    vmap: Tuple[int, ...]


@dataclass(frozen=True)
class FamilyCondition:
    """Instance of the non-representable consecutive-run family."""

    n_vertices: int
    r: int
    jumps: Tuple[int, ...]


@dataclass(frozen=True)
class ParityOutcome:
    kind: str  # "bipartite" | "prism" | "not_applicable"
    orientation: Optional[Orientation] = None
    prism: Optional[PrismReduction] = None


@dataclass(frozen=True)
class ComponentReduction:
    count: int
    inner: "ClassificationResult"


@dataclass(frozen=True)
class ClassificationResult:
    spec: CirculantSpec
    verdict: str
    theorem_tag: str
    certificate: object
    rep_number_upper: Optional[int] = None
    normalization: Optional[Tuple[int, Tuple[int, ...]]] = None  # (x, map)
    search_nodes: Optional[int] = None


def _morphism_offsets(n: int, x: int, scheme: str):
    if scheme == "x2":
        if x != 2 or n < 3:
            raise SchemeNotApplicableError(f"x2 needs x = 2 and n >= 3, got n={n}, x={x}")
        return (0, -2, n)
    if scheme == "half":
        if 2 * x != n:
            raise SchemeNotApplicableError(f"half needs x = n/2, got n={n}, x={x}")
        return (0, -1, x, n, -x)
    if scheme == "half_to_two_thirds":
        if not (2 * x > n and 3 * x <= 2 * n):
            raise SchemeNotApplicableError(
                f"half_to_two_thirds needs n/2 < x <= 2n/3, got n={n}, x={x}"
            )
        return (0, -1, -x, n, x)
    raise ValueError(f"unknown morphism scheme {scheme!r}; pick one of {MORPHISM_SCHEMES}")


def build_word_morphism(n: int, x: int, scheme: str) -> Tuple[int, ...]:
    """Representing word for C_2n(x, 1, n) by concatenating a vertex morphism.

    Each vertex i contributes a fixed block of neighbors-of-i (mod 2n); the
    word is the concatenation over i = 0..2n-1 and is 3-uniform for the x=2
    scheme, 5-uniform otherwise.  For n = 3 the graph is complete and the
    single permutation word suffices.  The result is verified against the
    built graph before being returned; failure is a fatal construction bug.
    """
    five_regular_spec(n, 1, x)
    spec = CirculantSpec(2 * n, (1, x, n))
    offsets = _morphism_offsets(n, x, scheme)
    m = 2 * n
    if scheme == "x2" and n == 3:
        word = tuple(range(6))
    else:
        word = tuple((i + o) % m for i in range(m) for o in offsets)
    ok, violations = represents(word, build_circulant(spec))
    if not ok:
        raise ConstructionBugError(
            f"morphism {scheme} word does not represent C_{m}{spec.jumps}",
            violations=violations,
        )
    return word


def parity_classify(n: int, a: int, b: int) -> ParityOutcome:
    """Same-parity reductions for C_2n(a, b, n) with n odd.

    Both jumps odd (with n odd) makes the graph bipartite: orienting every
    edge from even to odd vertices is semi-transitive outright.  Both jumps
    even peels off a P_2 factor: the graph is the prism over C_n(a/2, b/2),
    with the isomorphism map machine-verified.  Mixed parity (or even n with
    odd jumps) is out of scope for this reduction; even n with both jumps
    even means the graph is disconnected and must be decomposed first.
    """
    spec = five_regular_spec(n, a, b)
    if a % 2 == 0 and b % 2 == 0:
        if n % 2 == 0:
            raise DisconnectedError(
                f"C_{2 * n}({a},{b},{n}) has all jumps even; decompose first"
            )
        inner = CirculantSpec(n, (a // 2, b // 2))
        inv2 = mod_inverse(2, n)
        vmap = tuple((v % 2) * n + (inv2 * v) % n for v in range(2 * n))
        product = cartesian_product(complete_graph(2), build_circulant(inner))
        if not check_isomorphism_by_map(build_circulant(spec), product, vmap):
            raise CertificateFailureError(
                f"prism map for C_{2 * n}({a},{b},{n}) failed verification"
            )
        return ParityOutcome("prism", prism=PrismReduction(inner, vmap))
    if n % 2 == 1 and a % 2 == 1 and b % 2 == 1:
        g = build_circulant(spec)
        arcs = [(u, v) if u % 2 == 0 else (v, u) for u, v in g.edges]
        oriented = Orientation(g, arcs)
        assert is_semi_transitive(oriented)
        return ParityOutcome("bipartite", orientation=oriented)
    return ParityOutcome("not_applicable")


def factorize_5regular(n: int, a: int, b: int) -> Factorization:
    """Factor C_2n(a, b, n) as a 3-regular circulant times a cycle.

    Applies when n, b are odd and a is even, or n, a are even and b is odd;
    the two non-half jumps may be passed in either order and take the roles
    a (even) and b (odd) by parity.  The factorization exists iff some
    p > 2, 1 < q < n satisfy p | a, q | b, pq = 2n, gcd(p, q) = 1; the least
    such (p, q) is used, with jump sets R = {p/2, b/q}, S = {a/p} and the
    CRT-style vertex map v -> ((q^-1 v) mod p, (p^-1 v) mod q), row-major.
    """
    lo, hi = min(a, b), max(a, b)
    spec = five_regular_spec(n, lo, hi)
    if a % 2 == b % 2:
        raise PreconditionError(
            f"factorization needs one even and one odd jump besides n; "
            f"got n={n}, a={a}, b={b}"
        )
    if a % 2 == 1:
        a, b = b, a
    m = 2 * n
    for p in range(3, m + 1):
        if m % p:
            continue
        q = m // p
        if not 1 < q < n:
            continue
        if a % p or b % q or gcd(p, q) != 1:
            continue
        assert p % 2 == 0, "q | b forces q odd, so p carries the factor 2"
        r_jumps = tuple(sorted((p // 2, b // q)))
        s_jumps = (a // p,)
        q_inv = mod_inverse(q, p)
        p_inv = mod_inverse(p, q)
        vmap = tuple((q_inv * v % p) * q + (p_inv * v % q) for v in range(m))
        left = build_circulant(CirculantSpec(p, r_jumps))
        right = build_circulant(CirculantSpec(q, s_jumps))
        if not check_isomorphism_by_map(
            build_circulant(spec), cartesian_product(left, right), vmap
        ):
            raise CertificateFailureError(
                f"factorization map for C_{m}({a},{b},{n}) failed verification"
            )
        return Factorization(p, q, r_jumps, s_jumps, 1, vmap)
    raise NotFactorizableError(
        f"no p > 2, 1 < q < {n} with p|{a}, q|{b}, pq={m}, gcd(p,q)=1"
    )


def rep_bound_from_factorization(f: Factorization) -> int:
    """5 + min(p, q), valid for a 3-regular first factor and a cycle second."""
    if len(f.r_jumps) != 2 or 2 * max(f.r_jumps) != f.p:
        raise ValueError(f"first factor C_{f.p}{f.r_jumps} is not 3-regular")
    if len(f.s_jumps) != 1 or 2 * f.s_jumps[0] >= f.q:
        raise ValueError(f"second factor C_{f.q}{f.s_jumps} is not 2-regular")
    return 5 + min(f.p, f.q)


def non_representable_family(n: int, jumps) -> bool:
    """Consecutive run {r..2r} with 2 < (n+1)/5 < r < (n-1)/4, strictly."""
    jumps = tuple(sorted(jumps))
    r = jumps[0]
    if jumps != tuple(range(r, 2 * r + 1)):
        return False
    return 2 < Fraction(n + 1, 5) < r < Fraction(n - 1, 4)


def _verify_factor_representable(spec: CirculantSpec) -> bool:
    """Certify a (small) factor by finding a semi-transitive orientation."""
    d, reduced = component_decomposition(spec)
    if d > 1:
        return _verify_factor_representable(reduced)
    out = search_semi_transitive(
        build_circulant(spec), budget=_FACTOR_BUDGET, vertex_transitive=True
    )
    return out.status == FOUND


def classify(
    n: int,
    a: int,
    b: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    search_mode: str = "auto",
) -> ClassificationResult:
    """Classify C_2n(a, b, n), trying cheap certificates before the oracle.

    Pipeline: component decomposition, the non-representable family rule,
    parity reductions, normalization to a unit jump followed by the three
    morphism words and the eight coloring schemes, Cartesian factorization,
    and finally the exhaustive orientation search within `budget`.  The
    first success wins and every certificate is machine-verified.
    search_mode is handed to the fallback search ("exhaustive" spends the
    whole budget on the systematic pass for non-representability hunts).
    """
    spec = five_regular_spec(n, a, b)

    d, reduced = component_decomposition(spec)
    if d > 1:
        rn = reduced.jumps[-1]
        inner = classify(rn, reduced.jumps[0], reduced.jumps[1], budget, search_mode)
        return ClassificationResult(
            spec,
            inner.verdict,
            f"components:{inner.theorem_tag}",
            ComponentReduction(d, inner),
            rep_number_upper=inner.rep_number_upper,
        )

    if non_representable_family(2 * n, spec.jumps):
        r = spec.jumps[0]
        return ClassificationResult(
            spec,
            NOT_REPRESENTABLE_VERDICT,
            "family_consecutive_run",
            FamilyCondition(2 * n, r, spec.jumps),
        )

    parity = parity_classify(n, a, b)
    if parity.kind == "bipartite":
        return ClassificationResult(
            spec, REPRESENTABLE, "bipartite_all_jumps_odd", parity.orientation
        )
    if parity.kind == "prism":
        if _verify_factor_representable(parity.prism.inner):
            return ClassificationResult(
                spec, REPRESENTABLE, "prism_over_odd_cycle", parity.prism
            )

    normalization = None
    x = None
    if a == 1:
        x = b
    else:
        try:
            x, vmap = normalize_to_unit_jump(n, a, b)
            norm_spec = CirculantSpec(2 * n, tuple(sorted((1, x, n))))
            if not check_isomorphism_by_map(
                build_circulant(spec), build_circulant(norm_spec), vmap
            ):
                raise CertificateFailureError(
                    f"normalization map for C_{2 * n}({a},{b},{n}) failed verification"
                )
            normalization = (x, vmap)
        except NotNormalizableError:
            x = None

    if x is not None:
        norm_spec = CirculantSpec(2 * n, tuple(sorted((1, x, n))))
        morphism_plans = (
            ("x2", "k6_complete" if n == 3 else "morphism_x2", 1 if n == 3 else 3),
            ("half", "morphism_half", 5),
            ("half_to_two_thirds", "morphism_half_to_two_thirds", 5),
        )
        for scheme, tag, bound in morphism_plans:
            try:
                word = build_word_morphism(n, x, scheme)
            except SchemeNotApplicableError:
                continue
            return ClassificationResult(
                spec,
                REPRESENTABLE,
                tag,
                WordCertificate(norm_spec, word),
                rep_number_upper=bound,
                normalization=normalization,
            )

    for scheme in coloring_mod.ALL_SCHEMES:
        if scheme in ("mod3", "generator_blocks"):
            target_spec, norm = spec, None
        else:
            if x is None:
                continue
            target_spec, norm = (
                CirculantSpec(2 * n, tuple(sorted((1, x, n)))),
                normalization,
            )
        try:
            cert = coloring_mod.build_coloring(target_spec, scheme)
        except SchemeNotApplicableError:
            continue
        except CertificateFailureError:
            continue  # surfaced by build_coloring's evidence; fall through to search
        return ClassificationResult(
            spec,
            REPRESENTABLE,
            f"coloring_{scheme}",
            cert,
            normalization=norm,
        )

    try:
        fact = factorize_5regular(n, a, b)
    except (PreconditionError, NotFactorizableError):
        fact = None
    if fact is not None:
        left_ok = _verify_factor_representable(CirculantSpec(fact.p, fact.r_jumps))
        right_ok = _verify_factor_representable(CirculantSpec(fact.q, fact.s_jumps))
        if left_ok and right_ok:
            return ClassificationResult(
                spec,
                REPRESENTABLE,
                "cartesian_factorization",
                fact,
                rep_number_upper=rep_bound_from_factorization(fact),
            )

    out = search_semi_transitive(
        build_circulant(spec), budget=budget, vertex_transitive=True, mode=search_mode
    )
    if out.status == FOUND:
        return ClassificationResult(
            spec,
            REPRESENTABLE,
            "orientation_search",
            out.orientation,
            search_nodes=out.nodes,
        )
    if out.status == NOT_REPRESENTABLE:
        return ClassificationResult(
            spec, NOT_REPRESENTABLE_VERDICT, "orientation_search_exhausted", None,
            search_nodes=out.nodes,
        )
    return ClassificationResult(
        spec, UNKNOWN, "search_budget_exhausted", None, search_nodes=out.nodes
    )


def verify_classification(res: ClassificationResult) -> Optional[bool]:
    """Re-verify a result's certificate from scratch; None when none exists."""
    cert = res.certificate
    g = build_circulant(res.spec)
    if res.normalization is not None:
        x, vmap = res.normalization
        norm_spec = CirculantSpec(res.spec.n_vertices, tuple(sorted((1, x, res.spec.jumps[-1]))))
        if not check_isomorphism_by_map(g, build_circulant(norm_spec), vmap):
            return False
    if cert is None:
        return None
    if isinstance(cert, WordCertificate):
        ok, _ = represents(cert.word, build_circulant(cert.spec))
        return ok
    if isinstance(cert, coloring_mod.ColoringCertificate):
        try:
            coloring_mod.verify_certificate(cert)
        except CertificateFailureError:
            return False
        return True
    if isinstance(cert, Orientation):
        return cert.graph == g and is_semi_transitive(cert)
    if isinstance(cert, PrismReduction):
        product = cartesian_product(complete_graph(2), build_circulant(cert.inner))
        return check_isomorphism_by_map(g, product, cert.vmap) and _verify_factor_representable(cert.inner)
    if isinstance(cert, Factorization):
        left = CirculantSpec(cert.p, cert.r_jumps)
        right = CirculantSpec(cert.q, cert.s_jumps)
        product = cartesian_product(build_circulant(left), build_circulant(right))
        return (
            check_isomorphism_by_map(g, product, cert.vmap)
            and _verify_factor_representable(left)
            and _verify_factor_representable(right)
        )
    if isinstance(cert, FamilyCondition):
        return non_representable_family(cert.n_vertices, cert.jumps)
    if isinstance(cert, ComponentReduction):
        d, _ = component_decomposition(res.spec)
        if d != cert.count:
            return False
        return verify_classification(cert.inner)
    raise TypeError(f"unknown certificate type {type(cert).__name__}")


def _certificate_json(res: ClassificationResult):
    cert = res.certificate
    if cert is None:
        return None
    if isinstance(cert, WordCertificate):
        body = {
            "type": "word",
            "word": list(cert.word),
            "uniformity": cert.uniform,
            "spec": {"n_vertices": cert.spec.n_vertices, "jumps": list(cert.spec.jumps)},
        }
    elif isinstance(cert, coloring_mod.ColoringCertificate):
        body = {"type": "coloring", **coloring_mod.certificate_json(cert)}
    elif isinstance(cert, Orientation):
        body = {"type": "orientation", "arcs": [list(e) for e in cert.sorted_arcs()]}
    elif isinstance(cert, PrismReduction):
        body = {
            "type": "prism",
            "inner": {"n_vertices": cert.inner.n_vertices, "jumps": list(cert.inner.jumps)},
            "map": list(cert.vmap),
        }
    elif isinstance(cert, Factorization):
        body = {
            "type": "factorization",
            "p": cert.p,
            "q": cert.q,
            "r_jumps": list(cert.r_jumps),
            "s_jumps": list(cert.s_jumps),
            "d": cert.d,
            "map": list(cert.vmap),
        }
    elif isinstance(cert, FamilyCondition):
        body = {
            "type": "family",
            "n_vertices": cert.n_vertices,
            "r": cert.r,
            "jumps": list(cert.jumps),
        }
    elif isinstance(cert, ComponentReduction):
        body = {
            "type": "components",
            "count": cert.count,
            "reduced": classification_json(cert.inner),
        }
    else:  # pragma: no cover
        raise TypeError(f"unknown certificate type {type(cert).__name__}")
    if res.normalization is not None:
        x, vmap = res.normalization
        body["normalization"] = {"x": x, "map": list(vmap)}
    return body


def classification_json(
    res: ClassificationResult,
    verify_ok: Optional[bool] = None,
    elapsed_ms: Optional[float] = None,
) -> dict:
    """The documented result schema; elapsed_ms is included only when given."""
    a, b, nn = res.spec.jumps
    out = {
        "n": nn,
        "a": a,
        "b": b,
        "verdict": res.verdict,
        "theorem_tag": res.theorem_tag,
        "rep_number_upper": res.rep_number_upper,
        "certificate": _certificate_json(res),
        "verify_ok": verify_classification(res) if verify_ok is None else verify_ok,
    }
    if elapsed_ms is not None:
        out["elapsed_ms"] = elapsed_ms
    return out
