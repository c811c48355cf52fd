import pytest

from toruskein.bracket_planar import (
    CINQUEFOIL,
    FIGURE_EIGHT,
    HOPF_LINK,
    KINK_NEGATIVE,
    KINK_POSITIVE,
    SOLOMON_LINK,
    TREFOIL,
    UNKNOT,
    UNLINK_2,
    PDCode,
    add_reidemeister_ii,
    disjoint_union,
    kauffman_bracket,
    kauffman_bracket_recursive,
    mirror,
)
from toruskein.laurent import DELTA, LaurentPoly
from toruskein.smoothing_oracle import BudgetExceededError

CORPUS = [
    UNKNOT,
    UNLINK_2,
    HOPF_LINK,
    mirror(HOPF_LINK),
    TREFOIL,
    mirror(TREFOIL),
    FIGURE_EIGHT,
    KINK_POSITIVE,
    KINK_NEGATIVE,
    SOLOMON_LINK,
    CINQUEFOIL,
    disjoint_union(HOPF_LINK, UNKNOT),
]


class TestBracketValues:
    def test_hopf_link(self):
        assert kauffman_bracket(HOPF_LINK) == LaurentPoly.parse("A^-6 + A^-2 + A^2 + A^6")

    def test_kinks_carry_framing_factors(self):
        # One crossing: the state sum collapses to (-A^3) * delta or
        # (-A^-3) * delta depending on the kink sign.
        assert kauffman_bracket(KINK_POSITIVE) == DELTA * LaurentPoly.monomial(-1, 3)
        assert kauffman_bracket(KINK_NEGATIVE) == DELTA * LaurentPoly.monomial(-1, -3)

    def test_crossingless_diagrams(self):
        assert kauffman_bracket(UNLINK_2) == DELTA * DELTA
        assert kauffman_bracket(UNKNOT) == DELTA
        assert kauffman_bracket(PDCode(())) == LaurentPoly.one()

    def test_unknotted_clasp_resolves_to_circles(self):
        # Sanity against an independent expansion path on every corpus entry.
        for pd in CORPUS:
            assert kauffman_bracket(pd) == kauffman_bracket_recursive(pd)


class TestValidation:
    def test_edge_multiplicity_enforced(self):
        with pytest.raises(ValueError, match="exactly twice"):
            PDCode(((1, 2, 3, 4),))
        with pytest.raises(ValueError, match="exactly twice"):
            PDCode(((1, 1, 1, 1), (2, 2, 3, 3)))

    def test_free_loops_nonnegative(self):
        with pytest.raises(ValueError):
            PDCode((), free_loops=-1)

    def test_crossings_canonical_up_to_half_rotation(self):
        # re-reading a crossing from its outgoing under-strand names the same
        # unoriented crossing
        assert PDCode(((1, 2, 2, 1),)).crossings == PDCode(((2, 1, 1, 2),)).crossings
        assert HOPF_LINK == PDCode(((2, 4, 1, 3), (4, 2, 3, 1)))


class TestTextAndJson:
    def test_parse_and_str(self):
        pd = PDCode.parse("X(1,3,2,4) X(3,1,4,2) O")
        assert pd.crossing_count == 2 and pd.free_loops == 1
        assert PDCode.parse(str(pd)) == pd

    def test_parse_error(self):
        with pytest.raises(ValueError, match="bad PD token"):
            PDCode.parse("X(1,2,3)")

    def test_json_roundtrip(self):
        for pd in CORPUS:
            assert PDCode.from_json(pd.to_json()) == pd


class TestMirror:
    def test_involution(self):
        for pd in CORPUS:
            assert mirror(mirror(pd)) == pd

    def test_bracket_mirror_symmetry(self):
        for pd in CORPUS:
            assert kauffman_bracket(mirror(pd)) == kauffman_bracket(pd).mirror()

    def test_hopf_mirror_is_opposite_clasp(self):
        assert mirror(HOPF_LINK) != HOPF_LINK
        # the Hopf bracket happens to be mirror-symmetric as a polynomial
        assert kauffman_bracket(mirror(HOPF_LINK)) == kauffman_bracket(HOPF_LINK)


class TestReidemeisterII:
    def test_invariance_across_corpus(self):
        for pd in CORPUS:
            edges = sorted(pd.edges())
            if len(edges) < 2:
                continue
            value = kauffman_bracket(pd)
            pairs = [(edges[0], edges[1]), (edges[-1], edges[0]), (edges[1], edges[-1])]
            for over, under in pairs:
                if over == under:
                    continue
                poked = add_reidemeister_ii(pd, over, under)
                assert poked.crossing_count == pd.crossing_count + 2
                assert kauffman_bracket(poked) == value

    def test_double_poke(self):
        poked = add_reidemeister_ii(add_reidemeister_ii(TREFOIL, 1, 4), 2, 5)
        assert kauffman_bracket(poked) == kauffman_bracket(TREFOIL)

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            add_reidemeister_ii(HOPF_LINK, 1, 1)
        with pytest.raises(ValueError):
            add_reidemeister_ii(HOPF_LINK, 1, 99)


class TestDisjointUnion:
    def test_multiplicative(self):
        for left in (HOPF_LINK, TREFOIL, UNKNOT):
            for right in (KINK_POSITIVE, UNLINK_2, FIGURE_EIGHT):
                union = disjoint_union(left, right)
                assert kauffman_bracket(union) == kauffman_bracket(left) * kauffman_bracket(right)

    def test_relabels_to_keep_edges_unique(self):
        union = disjoint_union(HOPF_LINK, HOPF_LINK)
        assert union.crossing_count == 4


def test_budget_guard():
    big = TREFOIL
    for _ in range(12):
        big = disjoint_union(big, TREFOIL)
    with pytest.raises(BudgetExceededError):
        kauffman_bracket(big)
    with pytest.raises(BudgetExceededError):
        kauffman_bracket_recursive(big)
