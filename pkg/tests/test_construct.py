import pytest

from wordrep.construct import (
    ClassificationResult,
    ComponentReduction,
    Factorization,
    PrismReduction,
    WordCertificate,
    build_word_morphism,
    classification_json,
    classify,
    factorize_5regular,
    non_representable_family,
    parity_classify,
    rep_bound_from_factorization,
    verify_classification,
)
from wordrep.errors import (
    DisconnectedError,
    NotFactorizableError,
    PreconditionError,
    SchemeNotApplicableError,
)
from wordrep.graph import (
    CirculantSpec,
    build_circulant,
    cartesian_product,
    check_isomorphism_by_map,
    five_regular_spec,
)
from wordrep.orientation import is_semi_transitive
from wordrep.words import represents, rotate_uniform, uniformity


class TestMorphismWords:
    def test_x2_small_instance_pinned(self):
        w = build_word_morphism(4, 2, "x2")
        assert w[:9] == (0, 6, 4, 1, 7, 5, 2, 0, 6)
        assert len(w) == 24 and uniformity(w) == 3
        assert represents(w, build_circulant(CirculantSpec(8, (1, 2, 4))))[0]

    def test_x2_complete_graph_case(self):
        w = build_word_morphism(3, 2, "x2")
        assert w == (0, 1, 2, 3, 4, 5)
        assert uniformity(w) == 1

    def test_half_to_two_thirds_instance(self):
        w = build_word_morphism(10, 6, "half_to_two_thirds")
        assert len(w) == 100 and uniformity(w) == 5
        assert represents(w, build_circulant(CirculantSpec(20, (1, 6, 10))))[0]

    def test_half_instance(self):
        w = build_word_morphism(4, 2, "half")
        assert len(w) == 40 and uniformity(w) == 5
        assert represents(w, build_circulant(CirculantSpec(8, (1, 2, 4))))[0]

    def test_hypothesis_violations(self):
        with pytest.raises(SchemeNotApplicableError):
            build_word_morphism(5, 3, "x2")
        with pytest.raises(SchemeNotApplicableError):
            build_word_morphism(5, 2, "half")  # n odd
        with pytest.raises(SchemeNotApplicableError):
            build_word_morphism(10, 5, "half_to_two_thirds")  # x = n/2 boundary
        with pytest.raises(SchemeNotApplicableError):
            build_word_morphism(10, 7, "half_to_two_thirds")  # 3x > 2n
        with pytest.raises(ValueError):
            build_word_morphism(4, 2, "skew")

    def test_small_range_verified(self):
        # every hypothesis-satisfying (n, x) up to n = 15 yields a verified word
        for n in range(3, 16):
            for x in range(2, n):
                spec = CirculantSpec(2 * n, (1, x, n))
                for scheme, k in (("x2", 3), ("half", 5), ("half_to_two_thirds", 5)):
                    try:
                        w = build_word_morphism(n, x, scheme)
                    except SchemeNotApplicableError:
                        continue
                    expect = 1 if (scheme == "x2" and n == 3) else k
                    assert uniformity(w) == expect, (n, x, scheme)
                    assert represents(w, build_circulant(spec))[0]

    def test_rotations_still_represent(self):
        w = build_word_morphism(6, 4, "half_to_two_thirds")
        g = build_circulant(CirculantSpec(12, (1, 4, 6)))
        for cut in (1, 5, len(w) // 2, len(w) - 3):
            assert represents(rotate_uniform(w, cut), g)[0]


class TestParityClassify:
    def test_both_odd_is_bipartite(self):
        out = parity_classify(5, 1, 3)
        assert out.kind == "bipartite"
        assert is_semi_transitive(out.orientation)

    def test_both_even_is_prism(self):
        out = parity_classify(5, 2, 4)
        assert out.kind == "prism"
        assert out.prism.inner == CirculantSpec(5, (1, 2))
        product = cartesian_product(
            build_circulant(CirculantSpec(2, (1,))), build_circulant(out.prism.inner)
        )
        assert check_isomorphism_by_map(
            build_circulant(CirculantSpec(10, (2, 4, 5))), product, out.prism.vmap
        )

    def test_mixed_parity_not_applicable(self):
        assert parity_classify(5, 1, 2).kind == "not_applicable"

    def test_even_n_with_even_jumps_disconnected(self):
        with pytest.raises(DisconnectedError):
            parity_classify(6, 2, 4)


class TestFactorization:
    def test_example_30(self):
        f = factorize_5regular(15, 6, 5)
        assert (f.p, f.q) == (6, 5)
        assert f.r_jumps == (1, 3) and f.s_jumps == (1,) and f.d == 1
        assert rep_bound_from_factorization(f) == 10

    def test_example_12(self):
        f = factorize_5regular(6, 4, 3)
        assert (f.p, f.q) == (4, 3)
        assert f.r_jumps == (1, 2) and f.s_jumps == (1,)
        assert rep_bound_from_factorization(f) == 8

    def test_not_factorizable(self):
        with pytest.raises(NotFactorizableError):
            factorize_5regular(5, 2, 1)

    def test_same_parity_rejected(self):
        with pytest.raises(PreconditionError):
            factorize_5regular(5, 1, 3)

    def test_jump_roles_by_parity(self):
        assert factorize_5regular(15, 5, 6) == factorize_5regular(15, 6, 5)

    def test_malformed_bound_input(self):
        with pytest.raises(ValueError):
            rep_bound_from_factorization(
                Factorization(6, 5, (1, 2), (1,), 1, tuple(range(30)))
            )
        with pytest.raises(ValueError):
            rep_bound_from_factorization(
                Factorization(6, 5, (1, 3), (1, 2), 1, tuple(range(30)))
            )

    def test_iff_against_scan(self):
        # the existence condition is an iff: compare with a literal scan
        from math import gcd

        for n in range(3, 16):
            for a in range(1, n):
                for b in range(a + 1, n):
                    if a % 2 == b % 2:
                        continue
                    m = 2 * n
                    even, odd = (a, b) if a % 2 == 0 else (b, a)
                    scan = [
                        (p, m // p)
                        for p in range(3, m + 1)
                        if m % p == 0
                        and 1 < m // p < n
                        and even % p == 0
                        and odd % (m // p) == 0
                        and gcd(p, m // p) == 1
                    ]
                    try:
                        f = factorize_5regular(n, a, b)
                        assert scan and (f.p, f.q) == scan[0], (n, a, b)
                    except NotFactorizableError:
                        assert not scan, (n, a, b)


class TestFamilyRule:
    def test_in_family(self):
        assert non_representable_family(18, (4, 5, 6, 7, 8)) is True

    def test_boundary_excluded_strictly(self):
        assert non_representable_family(14, (3, 4, 5, 6)) is False

    def test_not_a_run(self):
        assert non_representable_family(20, (1, 2)) is False
        assert non_representable_family(18, (4, 5, 7, 8)) is False

    def test_more_members(self):
        assert non_representable_family(23, (5, 6, 7, 8, 9, 10)) is True
        assert non_representable_family(21, (5, 6, 7, 8, 9, 10)) is False  # r = (n-1)/4


class TestClassify:
    def test_k6_case(self):
        r = classify(3, 1, 2)
        assert r.verdict == "representable"
        assert r.theorem_tag == "k6_complete"
        assert r.rep_number_upper == 1
        assert isinstance(r.certificate, WordCertificate)
        assert uniformity(r.certificate.word) == 1

    def test_x2_case(self):
        r = classify(4, 1, 2)
        assert r.verdict == "representable" and r.rep_number_upper == 3

    def test_normalized_morphism_case(self):
        r = classify(9, 4, 7)  # 7x = 4 (mod 18) gives x = 16, canonical 2
        assert r.verdict == "representable"
        assert r.theorem_tag == "morphism_x2"
        assert r.normalization is not None and r.normalization[0] == 2

    def test_component_reduction(self):
        r = classify(6, 2, 4)
        assert r.theorem_tag.startswith("components:")
        assert isinstance(r.certificate, ComponentReduction)
        assert r.certificate.count == 2
        assert r.rep_number_upper == 1  # each component is K_6

    def test_budget_zero_unknown_when_no_theorem_fires(self):
        r = classify(8, 1, 7, budget=0)
        assert r.verdict == "unknown"
        assert r.theorem_tag == "search_budget_exhausted"
        assert classification_json(r)["verify_ok"] is None

    def test_search_fallback_found(self):
        r = classify(8, 1, 7)
        assert r.verdict == "representable"
        assert r.theorem_tag == "orientation_search"
        assert is_semi_transitive(r.certificate)

    def test_every_certificate_reverifies(self):
        cases = [
            (3, 1, 2),
            (4, 1, 2),
            (5, 1, 3),
            (5, 2, 4),
            (6, 3, 4),
            (8, 2, 5),
            (6, 4, 5),
            (9, 4, 7),
            (8, 1, 7),
            (6, 2, 4),
            (15, 5, 6),
        ]
        tags = set()
        for n, a, b in cases:
            r = classify(n, a, b)
            tags.add(r.theorem_tag.split(":")[0])
            assert verify_classification(r) is True, (n, a, b)
        assert len(tags) >= 7  # the sample covers most certificate kinds

    def test_json_schema(self):
        js = classification_json(classify(4, 1, 2), elapsed_ms=1.25)
        assert set(js) == {
            "n", "a", "b", "verdict", "theorem_tag", "rep_number_upper",
            "certificate", "verify_ok", "elapsed_ms",
        }
        assert js["certificate"]["type"] == "word"
        js2 = classification_json(classify(4, 1, 2))
        assert "elapsed_ms" not in js2

    def test_prism_certificate_json(self):
        js = classification_json(classify(5, 2, 4))
        assert js["certificate"]["type"] == "prism"
        assert js["certificate"]["inner"] == {"n_vertices": 5, "jumps": [1, 2]}

    def test_tampered_result_fails_verification(self):
        r = classify(4, 1, 2)
        bad = ClassificationResult(
            r.spec,
            r.verdict,
            r.theorem_tag,
            WordCertificate(r.certificate.spec, (0, 1, 2, 3, 4, 5, 6, 7)),
            rep_number_upper=r.rep_number_upper,
        )
        assert verify_classification(bad) is False
