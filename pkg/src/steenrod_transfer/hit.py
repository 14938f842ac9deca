"""Steenrod squares on H^*(BV_n) and the hit problem.

This is the cohomology side of the story, built deliberately from the
Cartan formula alone: Sq^i on a monomial distributes i over the
variables, and Sq^j(x^e) = binom(e, j) x^{e+j} with the binomial odd
exactly when the digits of j sit inside those of e.  Nothing here knows
about coactions or digit assignments, so agreement of its transposed
action matrices with the homology module is a real consistency check,
not a tautology.

A class is hit when it lies in A^+ H^*; since the Sq^{2^j} generate, the
hit elements of one degree are spanned by the images of the Sq^{2^j}
alone.  Conjugates chi(Sq^k) are kept as sums of Sq compositions and
only ever evaluated, never straightened through Adem relations.

The shorthand parser reads the compact monomial lists used for rank-4
elements: "4433" is an exponent tuple, "11,10,5" uses commas for
multi-digit entries, "18(53)" fixes a prefix and sums the distinct
permutations of the parenthesized tail, "[(4422)]" sums the distinct
permutations of the whole tuple, and a leading "(2,3)" transposes two
slots of whatever follows.  Written sources mix these conventions
freely, so resolution is constrained by the expected rank and degree
and ties are broken toward single-digit readings from the left.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .bv import Monomial, basis_dim, degree_basis, _basis_index
from .gf2 import GF2Matrix, GF2Subspace

__all__ = [
    "PolyElement",
    "sq",
    "sq_matrix",
    "decomposables",
    "is_hit",
    "chi_sq",
    "apply_op",
    "chi_trick_check",
    "peterson_wood",
    "transpose_slots",
    "ParseError",
    "parse_terms",
    "parse_poly",
]


@dataclass(frozen=True)
class PolyElement:
    """A sum of monomials in H^degree(BV_rank), exponent tuples mod 2."""

    rank: int
    degree: int
    terms: FrozenSet[Monomial]

    def __post_init__(self):
        for t in self.terms:
            if len(t) != self.rank or any(e < 0 for e in t):
                raise ValueError(f"bad monomial {t} for rank {self.rank}")
            if sum(t) != self.degree:
                raise ValueError(f"monomial {t} not of degree {self.degree}")

    @classmethod
    def zero(cls, rank: int, degree: int) -> "PolyElement":
        return cls(rank, degree, frozenset())

    @classmethod
    def x(cls, *exponents: int) -> "PolyElement":
        return cls(len(exponents), sum(exponents), frozenset({tuple(exponents)}))

    def is_zero(self) -> bool:
        return not self.terms

    def __xor__(self, other: "PolyElement") -> "PolyElement":
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("mismatched rank or degree")
        return PolyElement(self.rank, self.degree, self.terms ^ other.terms)

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        if self.rank != other.rank:
            raise ValueError("mismatched rank")
        acc: Set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(p + q for p, q in zip(a, b))}
        return PolyElement(self.rank, self.degree + other.degree, frozenset(acc))

    def to_coords(self) -> int:
        idx = _basis_index(self.rank, self.degree)
        v = 0
        for t in self.terms:
            v |= 1 << idx[t]
        return v

    @classmethod
    def from_coords(cls, rank: int, degree: int, v: int) -> "PolyElement":
        basis = degree_basis(rank, degree)
        return cls(rank, degree, frozenset(basis[i] for i in range(len(basis)) if v >> i & 1))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            "".join(f"x{v + 1}^{e}" for v, e in enumerate(t) if e) or "1"
            for t in sorted(self.terms, reverse=True)
        )


def _sq_mono(i: int, mono: Monomial) -> Set[Monomial]:
    """Sq^i on one monomial; Cartan over the variables."""
    out: Set[Monomial] = set()

    def rec(v: int, rem: int, acc: List[int]):
        if v == len(mono):
            if rem == 0:
                out.add(tuple(acc))
            return
        e = mono[v]
        # binom(e, j) odd iff the digits of j lie inside e
        j = e
        while True:
            if j <= rem:
                acc.append(e + j)
                rec(v + 1, rem - j, acc)
                acc.pop()
            if j == 0:
                break
            j = (j - 1) & e

    rec(0, i, [])
    return out


def sq(i: int, p: PolyElement) -> PolyElement:
    """Total Steenrod square Sq^i."""
    if i < 0:
        raise ValueError("negative square")
    if i == 0:
        return p
    acc: Set[Monomial] = set()
    for mono in p.terms:
        acc ^= _sq_mono(i, mono)
    return PolyElement(p.rank, p.degree + i, frozenset(acc))


@lru_cache(maxsize=None)
def sq_matrix(i: int, rank: int, degree: int) -> GF2Matrix:
    """Matrix of Sq^i: H^degree -> H^{degree+i}, target rows over source
    columns, in degree_basis coordinates on both sides."""
    src = degree_basis(rank, degree)
    tgt_idx = _basis_index(rank, degree + i)
    rows = [0] * basis_dim(rank, degree + i)
    for j, mono in enumerate(src):
        for image in _sq_mono(i, mono) if i else [mono]:
            rows[tgt_idx[image]] ^= 1 << j
    return GF2Matrix(rows, len(src))


@lru_cache(maxsize=None)
def decomposables(rank: int, degree: int) -> GF2Subspace:
    """The hit subspace (A^+ H^*)_degree of H^degree(BV_rank).

    Spanned by the images of the Sq^{2^j}, which suffice because they
    generate the algebra and hit elements absorb further operations.
    """
    vectors: List[int] = []
    tgt_idx = _basis_index(rank, degree)
    j = 0
    while (1 << j) <= degree:
        i = 1 << j
        for mono in degree_basis(rank, degree - i):
            v = 0
            for image in _sq_mono(i, mono):
                v ^= 1 << tgt_idx[image]
            if v:
                vectors.append(v)
        j += 1
    return GF2Subspace(basis_dim(rank, degree), vectors)


def is_hit(p: PolyElement) -> bool:
    return decomposables(p.rank, p.degree).contains(p.to_coords())


@lru_cache(maxsize=None)
def chi_sq(k: int) -> FrozenSet[Tuple[int, ...]]:
    """chi(Sq^k) as a parity set of Sq compositions, via the recursion
    chi(Sq^k) = sum_{i=1..k} Sq^i chi(Sq^{k-i}); no Adem straightening."""
    if k < 0:
        raise ValueError("negative square")
    if k == 0:
        return frozenset({()})
    acc: Set[Tuple[int, ...]] = set()
    for i in range(1, k + 1):
        for comp in chi_sq(k - i):
            acc ^= {(i,) + comp}
    return frozenset(acc)


def apply_op(compositions: Iterable[Tuple[int, ...]], p: PolyElement) -> PolyElement:
    """Evaluate a parity set of Sq compositions, rightmost factor first."""
    comps = sorted(compositions)
    if not comps:
        raise ValueError("empty operation")
    k = sum(comps[0])
    if any(sum(c) != k for c in comps):
        raise ValueError("inhomogeneous operation")
    total = PolyElement.zero(p.rank, p.degree + k)
    for comp in comps:
        q = p
        for i in reversed(comp):
            q = sq(i, q)
        total = total ^ q
    return total


def chi_trick_check(u: PolyElement, v: PolyElement, k: int) -> bool:
    """Whether u Sq^k(v) + chi(Sq^k)(u) v is hit, as it always should be."""
    w = u * sq(k, v) ^ apply_op(chi_sq(k), u) * v
    return decomposables(w.rank, w.degree).contains(w.to_coords())


def peterson_wood(mono: Monomial) -> bool:
    """The spike-avoidance criterion: a monomial of degree d with r odd
    exponents is hit whenever alpha(d + r) > r."""
    d = sum(mono)
    r = sum(1 for e in mono if e & 1)
    return bin(d + r).count("1") > r


# shorthand notation ---------------------------------------------------


class ParseError(ValueError):
    pass


def transpose_slots(p: PolyElement, i: int, j: int) -> PolyElement:
    """Swap variables i and j (1-indexed) in every term."""
    if not (1 <= i <= p.rank and 1 <= j <= p.rank):
        raise ValueError("slot out of range")
    return PolyElement(
        p.rank, p.degree, frozenset(_swapped(t, i - 1, j - 1) for t in p.terms)
    )


def _swapped(t: Monomial, i: int, j: int) -> Monomial:
    out = list(t)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def _chunkings(blob: str) -> List[Tuple[int, ...]]:
    """All readings of a digit string as a run of exponents; multi-digit
    chunks may not start with 0."""
    if not blob:
        return [()]
    out = []
    for end in range(1, len(blob) + 1):
        if end > 1 and blob[0] == "0":
            break
        head = int(blob[:end])
        out.extend((head,) + rest for rest in _chunkings(blob[end:]))
    return out


def _candidates(text: str) -> List[Tuple[int, ...]]:
    parts = [p for p in text.split(",") if p != ""]
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"cannot read {text!r} as exponents")
    pools = [_chunkings(p) for p in parts]
    return [tuple(itertools.chain.from_iterable(c)) for c in itertools.product(*pools)]


def _read_key(tup: Tuple[int, ...]) -> tuple:
    # fewest zeros, then multi-digit entries as late as possible
    return (sum(1 for e in tup if e == 0), tuple(e > 9 for e in tup), tup)


def _resolve(text: str, rank: Optional[int], degree: Optional[int]) -> Tuple[int, ...]:
    fits = [
        c
        for c in _candidates(text)
        if (rank is None or len(c) == rank) and (degree is None or sum(c) == degree)
    ]
    if not fits:
        raise ParseError(f"no reading of {text!r} fits rank {rank}, degree {degree}")
    return min(fits, key=_read_key)


def _parse_token(token: str, rank: Optional[int], degree: Optional[int]) -> Set[Monomial]:
    m = re.fullmatch(r"\((\d+),(\d+)\)(.+)", token)
    if m:
        i, j = int(m.group(1)), int(m.group(2))
        inner = _parse_token(m.group(3), rank, degree)
        return {_swapped(t, i - 1, j - 1) for t in inner}
    m = re.fullmatch(r"\[\(([0-9,]+)\)\]", token)
    if m:
        base = _resolve(m.group(1), rank, degree)
        return set(itertools.permutations(base))
    m = re.fullmatch(r"([0-9,]*)\(([0-9,]+)\)", token)
    if m:
        prefix_text, group_text = m.group(1), m.group(2)
        best = None
        for pre in _candidates(prefix_text):
            for grp in _candidates(group_text):
                whole = pre + grp
                if rank is not None and len(whole) != rank:
                    continue
                if degree is not None and sum(whole) != degree:
                    continue
                key = _read_key(whole)
                if best is None or key < best[0]:
                    best = (key, pre, grp)
        if best is None:
            raise ParseError(
                f"no reading of {token!r} fits rank {rank}, degree {degree}"
            )
        _, pre, grp = best
        return {pre + p for p in set(itertools.permutations(grp))}
    return {_resolve(token, rank, degree)}


def parse_terms(
    text: str, rank: Optional[int] = None, degree: Optional[int] = None
) -> FrozenSet[Monomial]:
    """Read a sum of monomials in the compact notation; GF(2) parities."""
    acc: Set[Monomial] = set()
    for token in text.replace(" ", "").replace("\n", "").split("+"):
        if token:
            acc ^= _parse_token(token, rank, degree)
    return frozenset(acc)


def parse_poly(text: str, rank: int, degree: int) -> PolyElement:
    return PolyElement(rank, degree, parse_terms(text, rank, degree))
