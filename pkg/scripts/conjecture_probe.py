#!/usr/bin/env python3
"""Sweep-style probes for the patterns the bundled checks pin at small scale.

Three probes, each a wider version of one acceptance criterion:

  window   compare the rank-1 image predicate (a partition of k+1 into
           parts 2^s(2^t - 1) with distinct s < m <= t) against direct
           evaluation of the chain map, over a degree sweep
  spikes   list the coincident degrees of the paired spike families and
           check them against the closed form 2^{2a+1} - 2^a - 2
  types    for rank 4 over E(2), classify which exponent types (k1..k4)
           contribute nonzero transfer classes in a given degree

The probes print findings and exit 0 when every sweep agrees with the
predicted pattern, 1 otherwise.
"""

import argparse
import pathlib
import sys
from dataclasses import dataclass

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from steenrod_transfer.bv import is_D_annihilated_rank1
from steenrod_transfer.checks import _presentable
from steenrod_transfer.milnor import Profile
from steenrod_transfer.transfer import f_star


@dataclass(frozen=True)
class ProbeConfig:
    max_degree: int = 400
    max_m: int = 4
    max_a: int = 6


def probe_window(cfg: ProbeConfig) -> bool:
    ok = True
    for m in range(1, cfg.max_m + 1):
        profile = Profile.E(m)
        mismatches = [
            k
            for k in range(1, cfg.max_degree + 1)
            if bool(f_star(k, profile)) != _presentable(k, m)
        ]
        if mismatches:
            ok = False
            print(f"m={m}: predicate disagrees at degrees {mismatches[:10]}")
        else:
            alive = sum(1 for k in range(1, cfg.max_degree + 1) if f_star(k, profile))
            print(f"m={m}: predicate matches through {cfg.max_degree} ({alive} alive)")
    return ok


def probe_spikes(cfg: ProbeConfig) -> bool:
    ok = True
    for a in range(2, cfg.max_a + 1):
        rows = []
        for i in range(a - 1):
            k = (1 << a) * (2 * (1 << i) - 1) - 1
            el = (1 << (a + i + 1)) * (2 * (1 << (a - i - 1)) - 1) - 1
            rows.append((i, k, el, k + el))
        commons = {r[3] for r in rows}
        closed = (1 << (2 * a + 1)) - (1 << a) - 2
        annihilated = all(
            is_D_annihilated_rank1(k) and is_D_annihilated_rank1(el)
            for _, k, el, _ in rows
        )
        good = commons == {closed} and annihilated
        ok = ok and good
        print(
            f"a={a}: {len(rows)} pairs, common degree {sorted(commons)}, "
            f"closed form {closed}, D-annihilated {annihilated}"
        )
    return ok


def probe_types(cfg: ProbeConfig, degree: int) -> bool:
    profile = Profile.E(2)
    alive = [k for k in range(1, degree + 1) if f_star(k, profile)]
    types = sorted(
        {
            tuple(sorted(t))
            for t in (
                (a, b, c, d)
                for a in alive
                for b in alive
                for c in alive
                for d in alive
            )
            if sum(t) == degree
        }
    )
    print(f"degree {degree}: slotwise-alive exponents {alive}")
    for t in types:
        print(f"  type {t}")
    # a single type would let slot reasoning decide the degree outright
    return len(types) <= 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("probe", choices=["window", "spikes", "types"])
    ap.add_argument("--max-degree", type=int, default=400)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--max-a", type=int, default=6)
    ap.add_argument("--degree", type=int, default=17, help="degree for the types probe")
    ns = ap.parse_args(argv)

    cfg = ProbeConfig(max_degree=ns.max_degree, max_m=ns.max_m, max_a=ns.max_a)
    if ns.probe == "window":
        ok = probe_window(cfg)
    elif ns.probe == "spikes":
        ok = probe_spikes(cfg)
    else:
        ok = probe_types(cfg, ns.degree)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
