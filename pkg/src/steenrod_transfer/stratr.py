"""The limit algebra R = F2[h_{t,s} | s < t] / (h_{t,s} h_{v,u} | u >= t)
with its Steenrod action on generators and the single-s exclusion test.

R is where the elementary transfers eventually land: a monomial is the
same data as a product of cobar classes h_{t,s}, and the encoding here
matches the HMono tuples of the cobar module on purpose.

The squares act through the generator rules

    Sq^{2^s}       h_{t,s} = h_{t-1,s+1}   when t-1 > s+1, else 0
    Sq^{2^{s+t-1}} h_{t,s} = h_{t-1,s}     when t-1 > s,   else 0

with every other Sq^{2^k} vanishing on h_{t,s}, extended to products by
the Cartan formula: each copy of a generator receives either the
identity or one of its two active squares, and the spent degrees must
add up.  Choosing a copies of one branch and b of the other out of e
equal factors carries the multinomial binom(e,a) binom(e-a,b), odd
exactly when the digit sets are nested.  Non-2-power squares are never
applied from outside, but they do appear internally when the budget
splits, and the same copy rule is their only consistent extension.

Nothing here computes the invariant ring itself; is_invariant probes
annihilation by Sq^{2^k} for k up to a caller-chosen bound, which
suffices because the 2-power squares generate.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple, Union

__all__ = [
    "RMonomial",
    "RElement",
    "r_mono",
    "r_element",
    "r_degree",
    "r_multiply",
    "sq_2k",
    "sq0_tilde",
    "is_invariant",
    "same_s_excluded",
    "r_text",
    "parse_r_text",
    "r_json",
    "parse_r_json",
]

# a product of h_{t,s}, as (t, s) pairs sorted descending; () is 1
RMonomial = Tuple[Tuple[int, int], ...]
RElement = FrozenSet[RMonomial]

R_ZERO: RElement = frozenset()
R_ONE: RElement = frozenset({()})


def _canonical(pairs: Iterable[Tuple[int, int]]) -> RMonomial:
    out = tuple(sorted(pairs, reverse=True))
    for t, s in out:
        if not 0 <= s < t:
            raise ValueError(f"h[{t},{s}] is not a generator (need 0 <= s < t)")
    return out


def _killed(mono: RMonomial) -> bool:
    """The defining relation: h_{t,s} h_{v,u} = 0 whenever u >= t."""
    return any(
        u >= t for (t, _), (_, u) in itertools.permutations(mono, 2)
    )


def r_mono(*pairs: Tuple[int, int]) -> RElement:
    """A single monomial, or zero if the relation kills it."""
    m = _canonical(pairs)
    return R_ZERO if _killed(m) else frozenset({m})


def r_element(monos: Iterable[Iterable[Tuple[int, int]]]) -> RElement:
    acc: Set[RMonomial] = set()
    for pairs in monos:
        m = _canonical(pairs)
        if not _killed(m):
            acc ^= {m}
    return frozenset(acc)


def r_degree(mono: RMonomial) -> Tuple[int, int]:
    """(homological length, internal degree)."""
    return len(mono), sum((1 << s) * ((1 << t) - 1) for t, s in mono)


def r_multiply(a: RElement, b: RElement) -> RElement:
    acc: Set[RMonomial] = set()
    for u in a:
        for v in b:
            m = _canonical(u + v)
            if not _killed(m):
                acc ^= {m}
    return frozenset(acc)


def _submasks(e: int):
    j = e
    while True:
        yield j
        if j == 0:
            return
        j = (j - 1) & e


def _sq_any_mono(budget: int, mono: RMonomial) -> RElement:
    """Sq^budget on one monomial by distributing 2-powers over copies."""
    groups = sorted(Counter(mono).items(), reverse=True)
    acc: Set[RMonomial] = set()

    def rec(i: int, rem: int, built: List[Tuple[int, int]]):
        if i == len(groups):
            if rem == 0:
                m = _canonical(built)
                if not _killed(m):
                    acc.symmetric_difference_update({m})
            return
        (t, s), e = groups[i]
        up_ok = t - 1 > s + 1  # h_{t-1,s+1} exists
        down_ok = t - 1 > s  # h_{t-1,s} exists
        for a in _submasks(e):
            if a and not up_ok:
                continue
            cost_a = a << s
            if cost_a > rem:
                continue
            for b in _submasks(e - a):
                if b and not down_ok:
                    continue
                cost = cost_a + (b << (s + t - 1))
                if cost > rem:
                    continue
                rec(
                    i + 1,
                    rem - cost,
                    built
                    + [(t, s)] * (e - a - b)
                    + [(t - 1, s + 1)] * a
                    + [(t - 1, s)] * b,
                )

    rec(0, budget, [])
    return frozenset(acc)


def _sq_any(budget: int, z: RElement) -> RElement:
    if budget == 0:
        return z
    acc: Set[RMonomial] = set()
    for mono in z:
        acc ^= _sq_any_mono(budget, mono)
    return frozenset(acc)


def sq_2k(k: int, z: RElement) -> RElement:
    """The generating operation Sq^{2^k} on a sum of monomials."""
    if k < 0:
        raise ValueError("negative index")
    return _sq_any(1 << k, z)


def sq0_tilde(z: RElement) -> RElement:
    """The shift h_{t,s} -> h_{t,s+1}, zero once s + 1 hits t."""
    acc: Set[RMonomial] = set()
    for mono in z:
        if any(s + 1 >= t for t, s in mono):
            continue
        m = _canonical((t, s + 1) for t, s in mono)
        if not _killed(m):
            acc ^= {m}
    return frozenset(acc)


def is_invariant(z: RElement, k_max: int) -> bool:
    """Annihilation by Sq^{2^k} for 0 <= k <= k_max.

    The 2-power squares generate, so once k_max is large enough that
    2^{k_max} exceeds every internal degree appearing in z this decides
    invariance under the whole augmentation ideal.
    """
    return all(not sq_2k(k, z) for k in range(k_max + 1))


def same_s_excluded(z: RElement, m: int) -> bool:
    """Whether some term is h_{t_1,s} ... h_{t_k,s} with one fixed s and
    not all t_i equal to m; such a term certifies that z cannot come
    through the E(m)-transfer."""
    for mono in z:
        if not mono:
            continue
        ss = {s for _, s in mono}
        if len(ss) == 1 and any(t != m for t, _ in mono):
            return True
    return False


# text and json forms --------------------------------------------------


def r_text(z: RElement) -> str:
    if not z:
        return "0"
    parts = []
    for mono in sorted(z, reverse=True):
        if not mono:
            parts.append("1")
            continue
        factors = []
        for (t, s), grp in itertools.groupby(mono):
            e = len(list(grp))
            factors.append(f"h[{t},{s}]" + (f"^{e}" if e > 1 else ""))
        parts.append(" * ".join(factors))
    return " + ".join(parts)


def parse_r_text(text: str) -> RElement:
    acc: Set[RMonomial] = set()
    for term in text.split("+"):
        term = term.strip()
        if not term or term == "0":
            continue
        if term == "1":
            acc ^= {()}
            continue
        pairs: List[Tuple[int, int]] = []
        for factor in term.split("*"):
            m = re.fullmatch(r"\s*h\[(\d+),(\d+)\](?:\^(\d+))?\s*", factor)
            if not m:
                raise ValueError(f"cannot read factor {factor!r}")
            t, s = int(m.group(1)), int(m.group(2))
            e = int(m.group(3) or 1)
            pairs.extend([(t, s)] * e)
        mono = _canonical(pairs)
        if not _killed(mono):
            acc ^= {mono}
    return frozenset(acc)


def r_json(z: RElement) -> str:
    terms = [
        [[t, s, len(list(grp))] for (t, s), grp in itertools.groupby(mono)]
        for mono in sorted(z, reverse=True)
    ]
    return json.dumps(terms)


def parse_r_json(text: str) -> RElement:
    data = json.loads(text)
    return r_element(
        [(t, s) for t, s, e in term for _ in range(e)] for term in data
    )
