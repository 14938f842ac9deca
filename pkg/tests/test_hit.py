"""Squares on polynomials, hit subspaces, conjugation, and the parser.

The module under test is built from the Cartan formula only, so the
checks against the coaction-based homology action (transposed matrices,
dimension duality) tie two independent code paths together.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steenrod_transfer.bv import (
    action_matrix,
    annihilated_subspace,
    basis_dim,
    degree_basis,
)
from steenrod_transfer.gf2 import GF2Subspace
from steenrod_transfer.hit import (
    ParseError,
    PolyElement,
    apply_op,
    chi_sq,
    chi_trick_check,
    decomposables,
    is_hit,
    parse_poly,
    parse_terms,
    peterson_wood,
    sq,
    sq_matrix,
    transpose_slots,
)
from steenrod_transfer.milnor import Profile, Pst


def sq_oracle_rank1(i, e):
    """Single variable: Sq^i x^e = binom(e, i) x^{e+i} by counting."""
    from math import comb

    return {(e + i,)} if comb(e, i) % 2 else set()


@st.composite
def poly_elements(draw, max_rank=3, max_exp=6, max_terms=3):
    rank = draw(st.integers(1, max_rank))
    degree = draw(st.integers(0, max_exp * rank))
    basis = degree_basis(rank, degree)
    if not basis:
        return PolyElement.zero(rank, degree)
    terms = draw(st.sets(st.sampled_from(basis), max_size=max_terms))
    return PolyElement(rank, degree, frozenset(terms))


class TestSq:
    def test_sq1_product_rule(self):
        assert sq(1, PolyElement.x(2, 1)) == PolyElement.x(2, 2)

    def test_sq2_cartan_split(self):
        assert sq(2, PolyElement.x(1, 1)) == PolyElement.x(2, 2)

    def test_sq0_identity(self):
        p = PolyElement(2, 5, frozenset({(4, 1), (2, 3)}))
        assert sq(0, p) == p

    @given(st.integers(0, 9), st.integers(0, 9))
    def test_rank1_against_binomial(self, i, e):
        got = sq(i, PolyElement.x(e)).terms
        assert set(got) == sq_oracle_rank1(i, e)

    @given(poly_elements())
    def test_vanishing_above_degree(self, p):
        assert sq(p.degree + 1, p).is_zero()

    @given(poly_elements(max_rank=2, max_exp=4))
    def test_top_square(self, p):
        doubled = frozenset(tuple(2 * e for e in t) for t in p.terms)
        assert sq(p.degree, p).terms == doubled

    @given(st.data(), st.integers(1, 2), st.integers(0, 6))
    def test_cartan_formula(self, data, rank, k):
        def element():
            degree = data.draw(st.integers(0, 6))
            basis = degree_basis(rank, degree)
            terms = data.draw(st.sets(st.sampled_from(basis), max_size=2)) if basis else set()
            return PolyElement(rank, degree, frozenset(terms))

        p, q = element(), element()
        total = sq(k, p * q)
        split = PolyElement.zero(p.rank, p.degree + q.degree + k)
        for i in range(k + 1):
            split = split ^ sq(i, p) * sq(k - i, q)
        assert total == split

    def test_matrix_route_matches(self):
        for rank, degree, i in [(2, 5, 2), (3, 4, 1), (1, 7, 4)]:
            m = sq_matrix(i, rank, degree)
            for j, mono in enumerate(degree_basis(rank, degree)):
                img = PolyElement.from_coords(rank, degree + i, m.mul_vec(1 << j))
                assert img == sq(i, PolyElement(rank, degree, frozenset({mono})))


class TestTransposeDuality:
    """Sq^{2^s} is the basis element dual to xi_1^{2^s}, so its matrix
    must be the transpose of the homology action matrix, which was coded
    from the coaction with no shared machinery."""

    @pytest.mark.parametrize("s", [0, 1, 2])
    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_transpose_of_action(self, s, rank):
        k = 1 << s
        for degree in range(k, 9):
            lhs = sq_matrix(k, rank, degree - k).transpose()
            rhs = action_matrix(Pst(s, 1), rank, degree)
            assert lhs.rows == rhs.rows and lhs.ncols == rhs.ncols


class TestDecomposables:
    def test_rank1_unhit_iff_spike(self):
        for d in range(1, 41):
            unhit = basis_dim(1, d) - decomposables(1, d).dim
            assert unhit == (1 if d + 1 == 1 << (d + 1).bit_length() - 1 else 0)

    def test_5555_is_hit(self):
        assert is_hit(PolyElement.x(5, 5, 5, 5))

    def test_duality_with_annihilated(self):
        for rank in (1, 2, 3):
            for degree in range(0, 17):
                hit_codim = basis_dim(rank, degree) - decomposables(rank, degree).dim
                assert hit_codim == annihilated_subspace(Profile.full(), rank, degree).dim

    def test_duality_rank4(self):
        for degree, total in ((14, 680), (17, 1140), (20, 1771)):
            assert basis_dim(4, degree) == total
            hit_codim = total - decomposables(4, degree).dim
            assert hit_codim == annihilated_subspace(Profile.full(), 4, degree).dim

    def test_decomposables_is_operator_stable(self):
        # applying any Sq to a hit class keeps it hit
        sub = decomposables(2, 6)
        for v in sub.basis:
            p = PolyElement.from_coords(2, 6, v)
            for i in (1, 2, 3):
                q = sq(i, p)
                assert q.is_zero() or is_hit(q)


class TestChiSq:
    def test_small_values(self):
        assert chi_sq(0) == frozenset({()})
        assert chi_sq(1) == frozenset({(1,)})
        assert chi_sq(2) == frozenset({(2,), (1, 1)})
        assert chi_sq(3) == frozenset({(3,), (1, 2), (2, 1), (1, 1, 1)})

    @given(st.integers(1, 7), poly_elements(max_rank=2, max_exp=3, max_terms=2))
    @settings(deadline=None)
    def test_defining_recursion_evaluates_to_zero(self, k, p):
        # sum_{i+j=k} Sq^i chi(Sq^j) is zero as an operation
        total = PolyElement.zero(p.rank, p.degree + k)
        for i in range(0, k + 1):
            total = total ^ sq(i, apply_op(chi_sq(k - i), p))
        assert total.is_zero()

    def test_chi_sq8_on_1111(self):
        got = apply_op(chi_sq(8), PolyElement.x(1, 1, 1, 1))
        want = parse_poly("[(4422)]+[(8211)]", 4, 12)
        assert got == want

    def test_apply_op_rejects_mixed_degrees(self):
        with pytest.raises(ValueError):
            apply_op([(1,), (2,)], PolyElement.x(1))


class TestChiTrick:
    def test_degree20_instance(self):
        assert chi_trick_check(PolyElement.x(1, 1, 1, 1), PolyElement.x(2, 2, 2, 2), 8)

    @given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 4),
           st.integers(0, 4), st.integers(0, 4))
    @settings(deadline=None, max_examples=40)
    def test_rank2_monomials(self, k, a, b, c, d):
        u = PolyElement.x(a, b)
        v = PolyElement.x(c, d)
        assert chi_trick_check(u, v, k)


class TestPetersonWood:
    def test_instances(self):
        assert peterson_wood((10, 4, 3, 3))
        assert peterson_wood((6, 6, 4, 4))
        assert not peterson_wood((5, 5, 5, 5))
        assert not peterson_wood((1,))

    def test_criterion_implies_hit(self):
        for rank in (1, 2, 3):
            for degree in range(1, 15):
                for mono in degree_basis(rank, degree):
                    if peterson_wood(mono):
                        assert is_hit(PolyElement(rank, degree, frozenset({mono})))

    def test_rank4_instances_are_hit(self):
        assert is_hit(PolyElement.x(10, 4, 3, 3))
        assert is_hit(PolyElement.x(6, 6, 4, 4))


class TestParser:
    def test_plain_digits(self):
        assert parse_terms("4433", 4, 14) == frozenset({(4, 4, 3, 3)})

    def test_sum_with_cancellation(self):
        assert parse_terms("4433+4433", 4, 14) == frozenset()

    def test_trailing_group(self):
        assert parse_terms("18(53)", 4, 17) == frozenset({(1, 8, 5, 3), (1, 8, 3, 5)})

    def test_group_with_repeats(self):
        got = parse_terms("4(355)", 4, 17)
        assert got == frozenset({(4, 3, 5, 5), (4, 5, 3, 5), (4, 5, 5, 3)})

    def test_bracket_whole_permutations(self):
        got = parse_terms("[(4422)]", 4, 12)
        assert got == frozenset(itertools.permutations((4, 4, 2, 2)))
        assert len(got) == 6

    def test_comma_splitting_prefers_single_digits(self):
        assert parse_terms("11,10,5", 4, 17) == frozenset({(1, 1, 10, 5)})
        assert parse_terms("11,12,3", 4, 17) == frozenset({(1, 1, 12, 3)})
        assert parse_terms("112,13", 4, 17) == frozenset({(1, 1, 2, 13)})
        assert parse_terms("114,11", 4, 17) == frozenset({(1, 1, 4, 11)})
        assert parse_terms("1,10,33", 4, 17) == frozenset({(1, 10, 3, 3)})

    def test_group_prefix_resolution(self):
        assert parse_terms("12(11,3)", 4, 17) == frozenset(
            {(1, 2, 11, 3), (1, 2, 3, 11)}
        )

    def test_transposition_prefix(self):
        assert parse_terms("(2,3)2255", 4, 14) == frozenset({(2, 5, 2, 5)})
        assert parse_terms("(1,3)2255", 4, 14) == frozenset({(5, 2, 2, 5)})

    def test_transpose_slots_matches_notation(self):
        p = parse_poly("2255+4433", 4, 14)
        assert transpose_slots(p, 2, 3).terms == parse_terms("(2,3)2255+(2,3)4433", 4, 14)

    def test_fewest_zeros_tiebreak(self):
        # (11,1,0,5) also fits but carries a zero
        assert parse_terms("11,10,5", 4, 17) == frozenset({(1, 1, 10, 5)})

    def test_unfittable_raises(self):
        with pytest.raises(ParseError):
            parse_terms("99", 4, 17)
        with pytest.raises(ParseError):
            parse_terms("x+y", 4, 17)

    def test_empty_tokens_tolerated(self):
        assert parse_terms("2555++1655", 4, 17) == parse_terms("2555+1655", 4, 17)


class TestPolyElement:
    def test_mul_is_frobenius_on_sums(self):
        p = PolyElement(1, 1, frozenset({(1,)}))
        q = PolyElement(1, 2, frozenset({(2,)}))
        s = p ^ PolyElement(1, 1, frozenset())  # just p
        assert (s * s).terms == q.terms  # (x)^2 = x^2

    def test_square_of_sum_has_no_cross_terms(self):
        p = PolyElement(2, 1, frozenset({(1, 0), (0, 1)}))
        assert (p * p).terms == frozenset({(2, 0), (0, 2)})

    def test_coords_roundtrip(self):
        p = PolyElement(3, 4, frozenset({(2, 1, 1), (4, 0, 0)}))
        assert PolyElement.from_coords(3, 4, p.to_coords()) == p

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            PolyElement(2, 3, frozenset({(1, 1)}))
