"""Dense linear algebra over GF(2) with Python-int bitset rows.

A matrix is a tuple of ints; bit j of a row is the entry in column j.
Everything is immutable; operations return new objects.  Subspaces are
kept in reduced row echelon form so equal subspaces compare equal.

Serialized form ("GF2M"): 4-byte magic, row count and column count as
64-bit little-endian words, then the rows in row-major order, each row
padded to ceil(cols/64) little-endian 64-bit words.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

__all__ = [
    "GF2Matrix",
    "GF2Subspace",
    "BudgetError",
    "bit_budget",
    "set_bit_budget",
]

_MAGIC = b"GF2M"

# rows*cols guard for a single matrix; keeps runaway degree/rank requests
# from allocating silly amounts of memory.
_BIT_BUDGET = 1 << 26


class BudgetError(Exception):
    """A requested object exceeds the configured size budget."""


def bit_budget() -> int:
    return _BIT_BUDGET


def set_bit_budget(bits: int) -> int:
    """Set the global rows*cols budget, returning the previous value."""
    global _BIT_BUDGET
    if bits <= 0:
        raise ValueError("budget must be positive")
    old = _BIT_BUDGET
    _BIT_BUDGET = bits
    return old


def _check_budget(nrows: int, ncols: int) -> None:
    if nrows * ncols > _BIT_BUDGET:
        raise BudgetError(
            f"matrix of {nrows}x{ncols} bits exceeds budget {_BIT_BUDGET}"
        )


def _rref(rows: Iterable[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    work = [r for r in rows if r]
    out: List[int] = []
    pivots: List[int] = []
    for col in range(ncols):
        bit = 1 << col
        hit = -1
        for i, r in enumerate(work):
            if r & bit:
                hit = i
                break
        if hit < 0:
            continue
        piv = work.pop(hit)
        work = [r ^ piv if r & bit else r for r in work]
        work = [r for r in work if r]
        out = [r ^ piv if r & bit else r for r in out]
        out.append(piv)
        pivots.append(col)
        if not work:
            break
    return out, pivots


class GF2Matrix:
    """Immutable bit matrix.  rows[i] holds row i, LSB = column 0."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(rows)
        if ncols < 0:
            raise ValueError("ncols must be nonnegative")
        mask = (1 << ncols) - 1
        for r in rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")
        _check_budget(len(rows), ncols)
        self.rows = rows
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols})"

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def vstack(cls, mats: Iterable["GF2Matrix"]) -> "GF2Matrix":
        mats = list(mats)
        if not mats:
            raise ValueError("vstack of nothing")
        ncols = mats[0].ncols
        rows: List[int] = []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("column count mismatch in vstack")
            rows.extend(m.rows)
        return cls(rows, ncols)

    def row(self, i: int) -> int:
        return self.rows[i]

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= bit
                r &= r - 1
        return GF2Matrix(cols, self.nrows)

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector: bit i of the result is <row i, v>."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def rank(self) -> int:
        return len(_rref(self.rows, self.ncols)[0])

    def row_space(self) -> "GF2Subspace":
        rows, pivots = _rref(self.rows, self.ncols)
        return GF2Subspace._trusted(self.ncols, tuple(rows), tuple(pivots))

    def kernel(self) -> "GF2Subspace":
        """Null space {v : M.mul_vec(v) == 0} as a subspace of F2^ncols."""
        rows, pivots = _rref(self.rows, self.ncols)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = 1 << free
            for r, p in zip(rows, pivots):
                if r & (1 << free):
                    v |= 1 << p
            basis.append(v)
        sub = GF2Matrix(basis, self.ncols).row_space()
        return sub

    def solve(self, target: int) -> Optional[int]:
        """Solve M x = target for x, or None.  target indexes rows."""
        if target < 0 or (self.nrows < target.bit_length()):
            raise ValueError("target outside row range")
        # eliminate on [M | target] with target carried as an extra column
        aug = [r | ((target >> i & 1) << self.ncols) for i, r in enumerate(self.rows)]
        rows, pivots = _rref(aug, self.ncols + 1)
        x = 0
        for r, p in zip(rows, pivots):
            if p == self.ncols:
                return None  # inconsistent
            if r >> self.ncols & 1:
                x |= 1 << p
        return x

    def to_bytes(self) -> bytes:
        wpr = (self.ncols + 63) // 64
        head = _MAGIC + self.nrows.to_bytes(8, "little") + self.ncols.to_bytes(8, "little")
        body = b"".join(r.to_bytes(wpr * 8, "little") for r in self.rows)
        return head + body

    @classmethod
    def from_bytes(cls, blob: bytes) -> "GF2Matrix":
        if blob[:4] != _MAGIC:
            raise ValueError("bad magic")
        nrows = int.from_bytes(blob[4:12], "little")
        ncols = int.from_bytes(blob[12:20], "little")
        wpr = (ncols + 63) // 64
        need = 20 + nrows * wpr * 8
        if len(blob) != need:
            raise ValueError(f"expected {need} bytes, got {len(blob)}")
        rows = []
        off = 20
        for _ in range(nrows):
            rows.append(int.from_bytes(blob[off : off + wpr * 8], "little"))
            off += wpr * 8
        return cls(rows, ncols)


class GF2Subspace:
    """A subspace of F2^ambient_dim, stored as an RREF basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[int]):
        rows, pivots = _rref(vectors, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def _trusted(cls, ambient_dim, basis, pivots) -> "GF2Subspace":
        self = object.__new__(cls)
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        return self

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF2Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"GF2Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, v: int) -> int:
        """Canonical coset representative of v modulo this subspace."""
        if v.bit_length() > self.ambient_dim:
            raise ValueError("vector outside ambient space")
        for r, p in zip(self.basis, self.pivots):
            if v >> p & 1:
                v ^= r
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def coords(self, v: int) -> Optional[int]:
        """Coefficients of v over the RREF basis rows, or None."""
        if self.reduce(v) != 0:
            return None
        out = 0
        for i, p in enumerate(self.pivots):
            if v >> p & 1:
                out |= 1 << i
        return out

    def contains_subspace(self, other: "GF2Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(r) for r in other.basis)

    def quotient_dim(self, sub: "GF2Subspace") -> int:
        """dim(self / sub); sub must be contained in self."""
        if not self.contains_subspace(sub):
            raise ValueError("not a subspace of this space")
        return self.dim - sub.dim

    def vectors(self) -> Tuple[int, ...]:
        return self.basis
