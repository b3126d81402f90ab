"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 1 internal or I/O error.
JSON output uses compact separators and a fixed key order so it is
byte-stable; text output is for people.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from typing import Sequence

from .bordism import CharNumberProfile, profile
from .classify import ClassificationResult, classify, downward_closed
from .decompose import decompose
from .expr import parse_expr
from .obstruction import en_pushforward, en_vanishes, enr_vanishes, range_flags, section_exists_rep

CSV_HEADER = ["m", "n", "case", "witness", "rule"]


SCHEMAS = {
    "classify": "classification.schema.json",
    "profile": "profile.schema.json",
    "en": "en.schema.json",
    "enr": "enr.schema.json",
    "decompose": "decompose.schema.json",
    "sections": "sections.schema.json",
}


class InternalError(RuntimeError):
    pass


def load_schema(command: str) -> dict:
    """JSON schema for the ``--json`` output of ``command``."""
    path = resources.files("z2bordism") / "schemas" / SCHEMAS[command]
    return json.loads(path.read_text(encoding="utf-8"))


def fmt_partition(J) -> str:
    return "[" + ",".join(str(j) for j in J) + "]"


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def profile_json(p: CharNumberProfile) -> dict:
    return {"m": p.m, "profile": [{"J": list(J), "value": b} for J, b in p.items()]}


def classification_json(res: ClassificationResult) -> dict:
    out = {
        "m": res.m,
        "n": res.n,
        "case": res.case.value,
        "witness": None if res.witness is None else {"J": list(res.witness)},
        "rule": res.rule,
    }
    if res.notes:
        out["notes"] = list(res.notes)
    return out


def classification_text(res: ClassificationResult) -> str:
    witness = "-" if res.witness is None else fmt_partition(res.witness)
    lines = [f"m={res.m} n={res.n} case={res.case.value} witness={witness} rule={res.rule}"]
    lines += [f"note: {note}" for note in res.notes]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands; each returns the rendered output without trailing newline


def cmd_profile(expr: str, as_json: bool = False) -> str:
    p = profile(parse_expr(expr))
    if as_json:
        return dumps(profile_json(p))
    return "\n".join(f"J={fmt_partition(J)}:{b}" for J, b in p.items())


def cmd_classify(expr: str, n: int, as_json: bool = False, all_reps: bool = False) -> str:
    res = classify(parse_expr(expr), n, connected_only=not all_reps)
    return dumps(classification_json(res)) if as_json else classification_text(res)


def cmd_en(expr: str, n: int, as_json: bool = False) -> str:
    d = parse_expr(expr)
    report = en_vanishes(profile(d), n)
    if as_json:
        return dumps(
            {
                "m": d.m,
                "n": n,
                "vanishes": report.vanishes,
                "witness": None if report.witness is None else {"J": list(report.witness)},
                "checked": report.checked_count,
                "pushforward": profile_json(en_pushforward(d, n)),
            }
        )
    if report.vanishes:
        return f"e_{n} = 0 (all {report.checked_count} required numbers vanish)"
    return f"e_{n} != 0 (witness J={fmt_partition(report.witness)} is nonzero)"


def cmd_enr(expr: str, n: int, r: int, as_json: bool = False) -> str:
    d = parse_expr(expr)
    report = enr_vanishes(profile(d), n, r)
    flags = range_flags(d.m, n, r)
    if as_json:
        witness = None
        if report.witness is not None:
            witness = {"q": report.q, "J": list(report.witness)}
        return dumps(
            {
                "m": d.m,
                "n": n,
                "r": r,
                "vanishes": report.vanishes,
                "witness": witness,
                "checked": report.checked_count,
                "range": {
                    "transversality_ok": flags.transversality_ok,
                    "surgery_ok": flags.surgery_ok,
                },
            }
        )
    if report.vanishes:
        head = f"e_{{{n},{r}}} = 0 (all {report.checked_count} required numbers vanish)"
    else:
        head = f"e_{{{n},{r}}} != 0 (witness q={report.q} J={fmt_partition(report.witness)} is nonzero)"
    yn = {True: "yes", False: "no"}
    return f"{head}\nrange: transversality={yn[flags.transversality_ok]} surgery={yn[flags.surgery_ok]}"


def cmd_decompose(expr: str, as_json: bool = False) -> str:
    p = profile(parse_expr(expr))
    res = decompose(p)
    if not res.consistent:
        raise InternalError("decomposition system is inconsistent")
    if as_json:
        return dumps(
            {
                "m": res.m,
                "consistent": res.consistent,
                "kernel_dim": res.kernel_dim,
                "coeffs": [
                    {"k": c.k, "numbers": [{"J": list(J), "value": b} for J, b in zip(c.partitions, c.bits)]}
                    for c in res.coeffs
                ],
            }
        )
    lines = []
    for c in res.coeffs:
        nums = " ".join(f"J={fmt_partition(J)}:{b}" for J, b in zip(c.partitions, c.bits))
        lines.append(f"a_{c.k}: {nums}")
    lines.append(f"kernel_dim={res.kernel_dim}")
    return "\n".join(lines)


def cmd_sections(expr: str, n: int, as_json: bool = False) -> str:
    d = parse_expr(expr)
    ok = section_exists_rep(d, n)
    if as_json:
        return dumps({"m": d.m, "n": n, "section_exists": ok})
    return f"{n}*lambda has a nowhere-zero section on this representative: {'yes' if ok else 'no'}"


def sweep_results(expr: str, n_max: int, all_reps: bool = False) -> list[ClassificationResult]:
    if n_max < 1:
        raise ValueError(f"--n-max must be >= 1, got {n_max}")
    p = profile(parse_expr(expr))
    results = [classify(p, n, connected_only=not all_reps) for n in range(1, n_max + 1)]
    if not downward_closed(results):
        raise InternalError(f"sweep of {expr!r} is not downward closed")
    return results


def cmd_sweep(expr: str, n_max: int, all_reps: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for res in sweep_results(expr, n_max, all_reps):
        witness = "" if res.witness is None else fmt_partition(res.witness)
        writer.writerow([res.m, res.n, res.case.value, witness, res.rule])
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("expr", help='manifold expression, e.g. "RP(1)*RP(2)^H + p(3)"')
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="z2bordism",
        description="Borsuk-Ulam classification of free Z/2-bordism classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("profile", parents=[common], help="all characteristic numbers N_J")

    sp = sub.add_parser("classify", parents=[common], help="ALL / MIXED / NONE for R^n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--all-reps", action="store_true", help="allow disconnected representatives")

    sp = sub.add_parser("en", parents=[common], help="vanishing of e_n")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("enr", parents=[common], help="vanishing of e_{n,r}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)

    sub.add_parser("decompose", parents=[common], help="coefficients in the p_i basis")

    sp = sub.add_parser("sections", parents=[common], help="section test on this representative")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("sweep", help="CSV table of the classification for n = 1..n_max")
    sp.add_argument("expr")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--all-reps", action="store_true")
    sp.add_argument("--out")
    return parser


def run(args: argparse.Namespace) -> str:
    c = args.command
    if c == "profile":
        return cmd_profile(args.expr, args.json)
    if c == "classify":
        return cmd_classify(args.expr, args.n, args.json, args.all_reps)
    if c == "en":
        return cmd_en(args.expr, args.n, args.json)
    if c == "enr":
        return cmd_enr(args.expr, args.n, args.r, args.json)
    if c == "decompose":
        return cmd_decompose(args.expr, args.json)
    if c == "sections":
        return cmd_sections(args.expr, args.n, args.json)
    if c == "sweep":
        return cmd_sweep(args.expr, args.n_max, args.all_reps)
    raise InternalError(f"unknown command {c}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
