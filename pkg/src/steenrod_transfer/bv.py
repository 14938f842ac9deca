"""Homology and cohomology of elementary abelian 2-groups.

H^*(BV_n) is the polynomial algebra on n degree-1 generators; a monomial
is its exponent tuple.  H_*(BV_n) is the dual divided power algebra with
basis dual to the monomials, written b_E.  Elements here are sets of
exponent tuples (coefficients in GF(2)); HElement fixes rank and degree.

The Steenrod action comes from one place only: the coaction on a rank-1
class x^d, which sends x^{2^j} to sum_i x^{2^{i+j}} (x) xi_i^{2^j} and is
multiplicative over the binary digits of d.  Extracting the coefficient
of a Milnor monomial xi^mu turns into a combinatorial rule: assign to
each xi_t a set of binary digits of the exponent.  The right action on
homology is the transpose pairing <b.theta, z> = <b, theta z>.

The general linear group acts by divided power substitution: for g in
GL(n, 2) the generator a_j goes to sum_i g[i][j] a_i (column convention),
expanded with gamma_k(u + v) = sum gamma_i(u) gamma_j(v) and the product
rule a^(p) a^(q) = binom(p+q, p) a^(p+q), odd exactly when p & q == 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
    Union,
)

from .gf2 import GF2Matrix, GF2Subspace
from .milnor import Profile, Pst, Xi, dual_basis, generators, mono_degree

__all__ = [
    "Monomial",
    "HElement",
    "degree_basis",
    "basis_dim",
    "expand_action",
    "action_matrix",
    "right_action",
    "coaction_on_power",
    "annihilated_subspace",
    "kappa_rho",
    "is_Em_annihilated_rank1",
    "is_D_annihilated_rank1",
    "kameko_sq0",
    "GLMatrix",
    "identity_matrix",
    "swap_matrix",
    "transvection",
    "gl_generators",
    "gl_act",
    "CoinvariantPresentation",
    "coinvariant_quotient",
]

Monomial = Tuple[int, ...]
GLMatrix = Tuple[Tuple[int, ...], ...]
Operation = Union[Pst, Xi]


@lru_cache(maxsize=None)
def degree_basis(rank: int, degree: int) -> Tuple[Monomial, ...]:
    """All exponent tuples of the given total degree, sorted."""
    if rank < 1:
        raise ValueError("rank must be positive")
    if degree < 0:
        return ()
    out = []
    # bars-and-stars: cut points of a weak composition
    for cuts in itertools.combinations(range(degree + rank - 1), rank - 1):
        prev = -1
        comp = []
        for c in cuts:
            comp.append(c - prev - 1)
            prev = c
        comp.append(degree + rank - 2 - prev)
        out.append(tuple(comp))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _basis_index(rank: int, degree: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(degree_basis(rank, degree))}


def basis_dim(rank: int, degree: int) -> int:
    if degree < 0:
        return 0
    return math.comb(degree + rank - 1, rank - 1)


@dataclass(frozen=True)
class HElement:
    """A homogeneous element of H_degree(BV_rank), as a set of b_E terms."""

    rank: int
    degree: int
    terms: FrozenSet[Monomial]

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))
        for m in self.terms:
            if len(m) != self.rank or any(e < 0 for e in m):
                raise ValueError(f"bad term {m} for rank {self.rank}")
            if sum(m) != self.degree:
                raise ValueError(f"term {m} not of degree {self.degree}")

    @classmethod
    def zero(cls, rank: int, degree: int) -> "HElement":
        return cls(rank, degree, frozenset())

    @classmethod
    def b(cls, *exponents: int) -> "HElement":
        return cls(len(exponents), sum(exponents), frozenset({tuple(exponents)}))

    def is_zero(self) -> bool:
        return not self.terms

    def __xor__(self, other: "HElement") -> "HElement":
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("rank/degree mismatch")
        return HElement(self.rank, self.degree, self.terms ^ other.terms)

    def to_coords(self) -> int:
        idx = _basis_index(self.rank, self.degree)
        v = 0
        for m in self.terms:
            v |= 1 << idx[m]
        return v

    @classmethod
    def from_coords(cls, rank: int, degree: int, v: int) -> "HElement":
        basis = degree_basis(rank, degree)
        terms = set()
        while v:
            i = (v & -v).bit_length() - 1
            terms.add(basis[i])
            v &= v - 1
        return cls(rank, degree, frozenset(terms))

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "degree": self.degree,
            "terms": sorted(list(m) for m in self.terms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HElement":
        return cls(d["rank"], d["degree"], frozenset(tuple(m) for m in d["terms"]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join("b" + "".join(f"({e})" for e in m) for m in sorted(self.terms))


# Steenrod action ------------------------------------------------------


def _as_mono(op: Operation) -> Xi:
    return op.dual if isinstance(op, Pst) else op


def expand_action(op: Operation, source: Monomial) -> FrozenSet[Monomial]:
    """Cohomology action of the Milnor basis element dual to xi^mu on x^E.

    Each xi_t in mu takes over a subset of the binary digits of the
    per-variable exponents: a digit 2^j assigned to xi_t turns into
    2^{j+t} in the target exponent, and the digit sets chosen for the
    different xi_t must be disjoint and sum to mu's exponents overall.
    Each valid assignment contributes one target monomial; parity counts.
    """
    mu = _as_mono(op)
    ts = tuple(t for t, _ in mu)
    out: set = set()
    n = len(source)

    def per_var(v: int, rem: Tuple[int, ...], acc: List[int]):
        if v == n:
            if not any(rem):
                out.symmetric_difference_update({tuple(acc)})
            return
        ev = source[v]
        digits = [1 << j for j in range(ev.bit_length()) if ev >> j & 1]

        def assign(i: int, taken: Tuple[int, ...], fv: int):
            if i == len(digits):
                acc.append(fv)
                per_var(v + 1, tuple(r - t for r, t in zip(rem, taken)), acc)
                acc.pop()
                return
            d = digits[i]
            assign(i + 1, taken, fv + d)  # digit left alone
            for c, t in enumerate(ts):
                if taken[c] + d <= rem[c]:
                    assign(i + 1, taken[:c] + (taken[c] + d,) + taken[c + 1 :], fv + (d << t))

        assign(0, (0,) * len(ts), 0)

    per_var(0, tuple(e for _, e in mu), [])
    return frozenset(out)


@lru_cache(maxsize=None)
def action_matrix(op: Operation, rank: int, degree: int) -> GF2Matrix:
    """Right action H_degree -> H_{degree-k} in basis coordinates.

    Row E (target basis) has bit F set iff x^F occurs in the cohomology
    expansion of op on x^E; mul_vec then maps source to target coords.
    """
    mu = _as_mono(op)
    k = mono_degree(mu)
    src_idx = _basis_index(rank, degree)
    rows = []
    for target in degree_basis(rank, degree - k):
        bits = 0
        for f in expand_action(mu, target):
            bits |= 1 << src_idx[f]
        rows.append(bits)
    return GF2Matrix(rows, basis_dim(rank, degree))


def right_action(x: HElement, op: Operation) -> HElement:
    """x . op in homology, computed term by term without matrices."""
    mu = _as_mono(op)
    k = mono_degree(mu)
    out = set()
    for target in degree_basis(x.rank, x.degree - k):
        if len(expand_action(mu, target) & x.terms) & 1:
            out.add(target)
    return HElement(x.rank, x.degree - k, frozenset(out))


def coaction_on_power(k: int, cap: int) -> Tuple[Tuple[int, Xi], ...]:
    """All terms x^f (x) xi^mu of the coaction on the rank-1 class x^k
    with f <= cap.

    Built digit by digit: the factor for digit 2^j of k is
    sum_i x^{2^{i+j}} (x) xi_i^{2^j}, and factors multiply.  Distinct
    digit choices give distinct xi-monomials, so no cancellation occurs
    and the coefficient of every pair is 1.  Runs forward from k, unlike
    expand_action which extracts one coefficient going backward.
    """
    if k < 0 or cap < 0:
        raise ValueError("exponent and cap must be nonnegative")
    terms: List[Tuple[int, Xi]] = []
    digits = [j for j in range(k.bit_length()) if k >> j & 1]

    def walk(pos: int, f: int, mono: Dict[int, int]):
        if f > cap:
            return
        if pos == len(digits):
            terms.append((f, tuple(sorted(mono.items()))))
            return
        j = digits[pos]
        i = 0
        while (1 << (i + j)) <= cap - f or i == 0:
            if i == 0:
                walk(pos + 1, f + (1 << j), mono)
            else:
                mono[i] = mono.get(i, 0) + (1 << j)
                walk(pos + 1, f + (1 << (i + j)), mono)
                if mono[i] == 1 << j:
                    del mono[i]
                else:
                    mono[i] -= 1 << j
            i += 1

    walk(0, 0, {})
    return tuple(sorted(terms))


def annihilated_subspace(
    profile: Profile,
    rank: int,
    degree: int,
    exhaustive: bool = False,
    matrix: Optional[Callable[[Operation, int, int], GF2Matrix]] = None,
) -> GF2Subspace:
    """Elements of H_degree(BV_rank) killed by the profile's algebra.

    Default uses the P_t^s of the profile; exhaustive=True runs every
    Milnor basis element of positive degree instead, which is the
    definition and serves as a cross-check on small windows.  matrix
    swaps in another action-matrix source, e.g. a disk cache.
    """
    ops: List[Operation]
    if exhaustive:
        ops = [m for d in range(1, degree + 1) for m in dual_basis(profile, d)]
    else:
        ops = list(generators(profile, degree))
    dim = basis_dim(rank, degree)
    make = matrix if matrix is not None else action_matrix
    mats = [make(op, rank, degree) for op in ops]
    mats = [m for m in mats if m.nrows]
    if not mats:
        return GF2Matrix.identity(dim).row_space()
    return GF2Matrix.vstack(mats).kernel()


# rank-1 arithmetic ----------------------------------------------------


def kappa_rho(k: int) -> Tuple[int, int]:
    """The unique (kappa, rho) with k + 1 = 2^kappa (2 rho - 1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = k + 1
    kappa = (m & -m).bit_length() - 1
    rho = ((m >> kappa) + 1) // 2
    return kappa, rho


def is_Em_annihilated_rank1(k: int, m: int) -> bool:
    """Whether b_k in H_*(BZ/2) is killed by the E(m) algebra.

    Arithmetic form: kappa >= m or rho <= 2^{m-1}.
    """
    kappa, rho = kappa_rho(k)
    return kappa >= m or rho <= 1 << (m - 1)


def is_D_annihilated_rank1(k: int) -> bool:
    """Whether b_k is killed by the diagonal-profile algebra: rho <= 2^kappa."""
    kappa, rho = kappa_rho(k)
    return rho <= 1 << kappa


def kameko_sq0(x: HElement) -> HElement:
    """Doubling map b_E -> b_{2E+1} on every exponent."""
    return HElement(
        x.rank,
        2 * x.degree + x.rank,
        frozenset(tuple(2 * e + 1 for e in m) for m in x.terms),
    )


# GL(n, 2) -------------------------------------------------------------


def identity_matrix(n: int) -> GLMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def swap_matrix(n: int, i: int, j: int) -> GLMatrix:
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return tuple(tuple(1 if perm[r] == c else 0 for c in range(n)) for r in range(n))


def transvection(n: int, i: int, j: int) -> GLMatrix:
    """I + E_ij: sends generator a_j to a_i + a_j, fixing the others."""
    if i == j:
        raise ValueError("need i != j")
    return tuple(
        tuple(1 if (r == c or (r == i and c == j)) else 0 for c in range(n))
        for r in range(n)
    )


def gl_generators(n: int) -> Tuple[GLMatrix, ...]:
    """Adjacent swaps plus one transvection generate GL(n, 2)."""
    gens = [swap_matrix(n, i, i + 1) for i in range(n - 1)]
    if n >= 2:
        gens.append(transvection(n, 0, 1))
    return tuple(gens)


def _compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def gl_act(g: GLMatrix, x: HElement) -> HElement:
    """Divided power substitution a_j -> sum_i g[i][j] a_i applied to x."""
    n = x.rank
    cols = [[i for i in range(n) if g[i][j]] for j in range(n)]
    out: set = set()
    for term in x.terms:
        partial = {(0,) * n}
        for j in range(n):
            k = term[j]
            if k == 0:
                continue
            if not cols[j]:
                partial = set()
                break
            nxt: set = set()
            for vec in partial:
                for comp in _compositions(k, len(cols[j])):
                    new = list(vec)
                    ok = True
                    for i, c in zip(cols[j], comp):
                        if new[i] & c:  # binom(p+q, p) even
                            ok = False
                            break
                        new[i] += c
                    if ok:
                        nxt.symmetric_difference_update({tuple(new)})
            partial = nxt
        out ^= partial
    return HElement(x.rank, x.degree, frozenset(out))


# coinvariants ---------------------------------------------------------


@dataclass(frozen=True)
class CoinvariantPresentation:
    """A GL-stable subspace P of H_degree together with its coinvariant
    quotient P / span{p + g p}."""

    rank: int
    degree: int
    space: GF2Subspace
    relations: GF2Subspace
    reps: GF2Subspace

    @property
    def dim(self) -> int:
        return self.space.dim - self.relations.dim

    def reduce(self, x: HElement) -> HElement:
        v = x.to_coords()
        if not self.space.contains(v):
            raise ValueError("element not in the subspace")
        return HElement.from_coords(self.rank, self.degree, self.relations.reduce(v))

    def class_coords(self, x: HElement) -> int:
        v = self.reduce(x).to_coords()
        c = self.reps.coords(v)
        assert c is not None
        return c

    def is_zero_class(self, x: HElement) -> bool:
        return self.class_coords(x) == 0

    def same_class(self, x: HElement, y: HElement) -> bool:
        return self.class_coords(x) == self.class_coords(y)

    def class_reps(self) -> Tuple[HElement, ...]:
        return tuple(
            HElement.from_coords(self.rank, self.degree, v) for v in self.reps.basis
        )


def coinvariant_quotient(
    space: Union[GF2Subspace, Profile], rank: int, degree: int
) -> CoinvariantPresentation:
    """Quotient of a GL-stable subspace by the augmentation submodule.

    Relations are spanned by p + g p for p over a basis of the space and
    g over group generators; stability under the generators is enough
    and is verified here.  Passing a profile quotients its annihilated
    subspace, which is GL-stable because the two actions commute.
    """
    if isinstance(space, Profile):
        space = annihilated_subspace(space, rank, degree)
    ambient = basis_dim(rank, degree)
    if space.ambient_dim != ambient:
        raise ValueError("subspace not in the right coordinate space")
    vecs = []
    for v in space.basis:
        x = HElement.from_coords(rank, degree, v)
        for g in gl_generators(rank):
            w = v ^ gl_act(g, x).to_coords()
            if not space.contains(w):
                raise ValueError("subspace is not GL-stable")
            vecs.append(w)
    relations = GF2Subspace(ambient, vecs)
    reps = GF2Subspace(ambient, [relations.reduce(v) for v in space.basis])
    return CoinvariantPresentation(rank, degree, space, relations, reps)
