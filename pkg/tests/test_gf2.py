import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steenrod_transfer.gf2 import (
    BudgetError,
    GF2Matrix,
    GF2Subspace,
    bit_budget,
    set_bit_budget,
)


def span(vectors, ncols):
    """All linear combinations, by brute force.  Oracle for small cases."""
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def bits(s):
    """'110' -> int with bit 0 = leftmost char, matching written-out vectors."""
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def random_matrix(rng, nrows, ncols):
    return GF2Matrix([rng.getrandbits(ncols) for _ in range(nrows)], ncols)


class TestRank:
    def test_small_oracle(self):
        vecs = [bits("110"), bits("011"), bits("101")]
        m = GF2Matrix(vecs, 3)
        # 101 = 110 + 011, so the span has 4 elements
        assert len(span(vecs, 3)) == 4
        assert m.rank() == 2

    def test_identity(self):
        assert GF2Matrix.identity(17).rank() == 17

    def test_zero(self):
        assert GF2Matrix([0, 0, 0], 5).rank() == 0

    @given(st.lists(st.integers(0, 2**6 - 1), max_size=6))
    def test_rank_equals_log2_span(self, rows):
        m = GF2Matrix(rows, 6)
        assert 2 ** m.rank() == len(span(rows, 6))

    @given(st.lists(st.integers(0, 2**8 - 1), min_size=1, max_size=12))
    def test_rank_transpose(self, rows):
        m = GF2Matrix(rows, 8)
        assert m.rank() == m.transpose().rank()


class TestRowSpace:
    def test_canonical(self):
        a = GF2Matrix([bits("110"), bits("011")], 3).row_space()
        b = GF2Matrix([bits("101"), bits("011"), bits("110")], 3).row_space()
        assert a == b
        assert a.dim == 2

    @given(st.lists(st.integers(0, 2**7 - 1), max_size=8))
    def test_membership_matches_enumeration(self, rows):
        sub = GF2Matrix(rows, 7).row_space()
        full = span(rows, 7)
        for v in range(2**7):
            assert sub.contains(v) == (v in full)

    @given(st.lists(st.integers(0, 2**6 - 1), max_size=6), st.integers(0, 2**6 - 1))
    def test_reduce_is_coset_invariant(self, rows, v):
        sub = GF2Matrix(rows, 6).row_space()
        for b in sub.basis:
            assert sub.reduce(v ^ b) == sub.reduce(v)
        assert sub.contains(v ^ sub.reduce(v))

    def test_coords_roundtrip(self):
        sub = GF2Matrix([bits("1100"), bits("0110"), bits("0011")], 4).row_space()
        for v in range(16):
            c = sub.coords(v)
            if c is None:
                assert not sub.contains(v)
                continue
            acc = 0
            for i, r in enumerate(sub.basis):
                if c >> i & 1:
                    acc ^= r
            assert acc == v


class TestKernel:
    def test_all_ones_row(self):
        ker = GF2Matrix([bits("111")], 3).kernel()
        # even-weight vectors
        expected = {v for v in range(8) if bin(v).count("1") % 2 == 0}
        assert {v for v in range(8) if ker.contains(v)} == expected

    @given(st.lists(st.integers(0, 2**6 - 1), min_size=1, max_size=8))
    def test_kernel_by_enumeration(self, rows):
        m = GF2Matrix(rows, 6)
        ker = m.kernel()
        expected = {v for v in range(2**6) if m.mul_vec(v) == 0}
        assert {v for v in range(2**6) if ker.contains(v)} == expected
        assert ker.dim == 6 - m.rank()


class TestSolve:
    def test_column_combination(self):
        # columns 110 and 011; their sum is 101
        m = GF2Matrix([bits("110"), bits("011")], 3).transpose()
        assert m.nrows == 3 and m.ncols == 2
        x = m.solve(bits("101"))
        assert x == 0b11
        assert m.mul_vec(x) == bits("101")

    def test_inconsistent(self):
        m = GF2Matrix([0b01, 0b01], 2)
        assert m.solve(0b01) is None

    @given(st.lists(st.integers(0, 2**5 - 1), min_size=1, max_size=7), st.data())
    def test_solve_finds_known_solution(self, rows, data):
        m = GF2Matrix(rows, 5)
        x0 = data.draw(st.integers(0, 2**5 - 1))
        target = m.mul_vec(x0)
        x = m.solve(target)
        assert x is not None
        assert m.mul_vec(x) == target

    def test_seeded_large(self):
        rng = random.Random(20260814)
        m = random_matrix(rng, 200, 200)
        x0 = rng.getrandbits(200)
        x = m.solve(m.mul_vec(x0))
        assert x is not None and m.mul_vec(x) == m.mul_vec(x0)
        assert m.rank() + m.kernel().dim == 200


class TestTranspose:
    @given(st.lists(st.integers(0, 2**9 - 1), max_size=9))
    def test_involution(self, rows):
        m = GF2Matrix(rows, 9)
        assert m.transpose().transpose() == m

    def test_entries(self):
        m = GF2Matrix([bits("10"), bits("11"), bits("01")], 2)
        t = m.transpose()
        for i in range(m.nrows):
            for j in range(m.ncols):
                assert (m.rows[i] >> j & 1) == (t.rows[j] >> i & 1)


class TestSerialization:
    @given(st.lists(st.integers(0, 2**70 - 1), max_size=5))
    def test_roundtrip_wide(self, rows):
        m = GF2Matrix(rows, 70)
        assert GF2Matrix.from_bytes(m.to_bytes()) == m

    def test_header_layout(self):
        m = GF2Matrix([1, 2], 2)
        blob = m.to_bytes()
        assert blob[:4] == b"GF2M"
        assert int.from_bytes(blob[4:12], "little") == 2
        assert int.from_bytes(blob[12:20], "little") == 2
        assert len(blob) == 20 + 2 * 8

    def test_bad_magic(self):
        with pytest.raises(ValueError):
            GF2Matrix.from_bytes(b"XXXX" + bytes(16))

    def test_truncated(self):
        blob = GF2Matrix([1, 2, 3], 65).to_bytes()
        with pytest.raises(ValueError):
            GF2Matrix.from_bytes(blob[:-1])


class TestQuotient:
    def test_quotient_dim(self):
        big = GF2Matrix([bits("100"), bits("010"), bits("001")], 3).row_space()
        small = GF2Matrix([bits("110")], 3).row_space()
        assert big.quotient_dim(small) == 2

    def test_not_contained(self):
        a = GF2Matrix([bits("10")], 2).row_space()
        b = GF2Matrix([bits("01")], 2).row_space()
        with pytest.raises(ValueError):
            a.quotient_dim(b)


class TestBudget:
    def test_budget_respected(self):
        old = set_bit_budget(100)
        try:
            with pytest.raises(BudgetError):
                GF2Matrix([0] * 11, 10)
            GF2Matrix([0] * 10, 10)  # exactly at budget is fine
        finally:
            set_bit_budget(old)
        assert bit_budget() == old

    def test_vstack(self):
        a = GF2Matrix([1, 2], 3)
        b = GF2Matrix([4], 3)
        assert GF2Matrix.vstack([a, b]).rows == (1, 2, 4)
        with pytest.raises(ValueError):
            GF2Matrix.vstack([a, GF2Matrix([1], 2)])
