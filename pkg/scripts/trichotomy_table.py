"""Classification table over n for a list of manifold expressions.

    python scripts/trichotomy_table.py --out table.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from z2bordism.cli import sweep_results
from z2bordism.expr import parse_expr


@dataclass
class TableConfig:
    exprs: list[str] = field(
        default_factory=lambda: [f"p({m})" for m in range(2, 9)]
        + ["RP(1)*RP(2)^H", "RP(2)*RP(2)^H", "RP(2)^H*RP(2)^H", "RP(4)*RP(1)^H + p(5)", "RP(2)*p(4)"]
    )
    extra_n: int = 2
    all_reps: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="CSV path (default stdout)")
    ap.add_argument("--all-reps", action="store_true")
    ap.add_argument("exprs", nargs="*")
    args = ap.parse_args()
    cfg = TableConfig(all_reps=args.all_reps)
    if args.exprs:
        cfg.exprs = args.exprs

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["expr", "m", "n", "case", "witness", "rule"])
    for expr in cfg.exprs:
        m = parse_expr(expr).m
        for r in sweep_results(expr, m + cfg.extra_n, cfg.all_reps):
            witness = "" if r.witness is None else "[" + ",".join(map(str, r.witness)) + "]"
            writer.writerow([expr, r.m, r.n, r.case.value, witness, r.rule])
    if args.out:
        fh.close()


if __name__ == "__main__":
    main()
