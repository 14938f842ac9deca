#!/usr/bin/env python3
"""Tabulate annihilated and coinvariant dimensions over a degree sweep.

For each degree the script reports dim H_d(BV_n), the dimension of the
subspace killed by the chosen algebra's positive-degree generators, the
dimension of the GL_n coinvariant quotient of that subspace, and, for
elementary profiles, the distinct nonzero transfer classes found among
the kernel basis vectors.  Rank 1 columns come out instantly; rank 4 at
degree 20 takes about a second per degree.

Usage:
    python3 scripts/transfer_table.py E2 2 1..24
    python3 scripts/transfer_table.py A 4 14..20 --classes
    python3 scripts/transfer_table.py D 1 1..40 --csv
"""

import argparse
import pathlib
import sys
from dataclasses import dataclass

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from steenrod_transfer.bv import (
    HElement,
    annihilated_subspace,
    basis_dim,
    coinvariant_quotient,
)
from steenrod_transfer.cli import parse_algebra, parse_degree_range
from steenrod_transfer.cobar import hclass_str
from steenrod_transfer.milnor import Profile
from steenrod_transfer.transfer import transfer_class


@dataclass(frozen=True)
class TableConfig:
    profile: Profile
    rank: int
    degrees: range
    with_classes: bool = False
    csv: bool = False


def row(cfg: TableConfig, degree: int):
    total = basis_dim(cfg.rank, degree)
    kernel = annihilated_subspace(cfg.profile, cfg.rank, degree)
    quo = coinvariant_quotient(kernel, cfg.rank, degree)
    classes = []
    if cfg.with_classes and cfg.profile.is_elementary():
        seen = set()
        for v in kernel.basis:
            cls = transfer_class(HElement.from_coords(cfg.rank, degree, v), cfg.profile)
            if cls and cls not in seen:
                seen.add(cls)
                classes.append(hclass_str(cls))
    return total, kernel.dim, quo.dim, sorted(classes)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("algebra", help="A, D, E<m>, D<m>, or profile=v1,v2,...")
    ap.add_argument("rank", type=int)
    ap.add_argument("degrees", help="inclusive range a..b")
    ap.add_argument("--classes", action="store_true", help="list transfer classes")
    ap.add_argument("--csv", action="store_true")
    ns = ap.parse_args(argv)

    cfg = TableConfig(
        profile=parse_algebra(ns.algebra),
        rank=ns.rank,
        degrees=parse_degree_range(ns.degrees),
        with_classes=ns.classes,
        csv=ns.csv,
    )

    if cfg.csv:
        print("degree,total_dim,annihilated_dim,coinvariant_dim,classes")
    else:
        print(f"{'d':>4} {'H_d':>6} {'ann':>5} {'coinv':>5}  classes")
    for d in cfg.degrees:
        total, ann, coinv, classes = row(cfg, d)
        if cfg.csv:
            print(f"{d},{total},{ann},{coinv},{'|'.join(classes)}")
        else:
            tail = "  " + "; ".join(classes) if classes else ""
            print(f"{d:>4} {total:>6} {ann:>5} {coinv:>5}{tail}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
