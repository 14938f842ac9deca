#!/usr/bin/env python3
"""Regenerate the packaged fixture elements from their compact notation.

The rank-2 witness is typed directly.  The two rank-4 elements are read
through the shorthand parser; the degree-17 candidate mixes notations
(prefix groups, comma forms, bare digit runs) and its transcription is
best effort, which is fine because nothing downstream depends on it
being exactly the printed element.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from steenrod_transfer.bv import HElement
from steenrod_transfer.hit import parse_terms

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "src" / "steenrod_transfer" / "fixtures"

D0_X = "2255+2165+1256+1166+4253+4163+3263+2435+1436+2336+4433"
D0_EXTRA = "3155+5513+5135+5315+5333"

E0_CANDIDATE = (
    "2555+1655+18(53)+17(63)+14(75)+13(76)+14(93)+23(93)"
    "+12(95)+11,10,5+1169+12(11,3)+4(355)+11,12,3+114,11+"
    "+1187+2177+112,13+111,14+3356+3635+3563"
    "+5336+5633+5363+6(335)+8333+7433+7253+7163"
    "+2933+1,10,33+2735+2375+2357+1736+1376+1367"
)


def swapped(terms, i, j):
    out = set()
    for t in terms:
        u = list(t)
        u[i - 1], u[j - 1] = u[j - 1], u[i - 1]
        out.add(tuple(u))
    return frozenset(out)


def write(name, element):
    path = FIXTURES / name
    path.write_text(json.dumps(element.to_dict(), indent=1) + "\n")
    print(f"{name}: rank {element.rank} degree {element.degree} terms {len(element.terms)}")


def main():
    FIXTURES.mkdir(exist_ok=True)

    witness = HElement(2, 11, frozenset({(6, 5), (3, 8), (9, 2), (10, 1), (7, 4)}))
    write("coinvariant_witness_deg11.json", witness)

    x = parse_terms(D0_X, 4, 14)
    z = x ^ swapped(x, 2, 3) ^ swapped(x, 1, 3) ^ parse_terms(D0_EXTRA, 4, 14)
    write("d0_chain_rep.json", HElement(4, 14, z))

    e0 = parse_terms(E0_CANDIDATE, 4, 17)
    write("e0_chain_candidate.json", HElement(4, 17, e0))


if __name__ == "__main__":
    main()
