"""Command-line front end: stratum tables, censuses, end-to-end checks.

Subcommands
-----------
strata   JSON table of the fine strata for rank c (optionally lifted to
         genus g).
census   classify every Lagrangian over F_{p^{2m}}; CSV or JSON output.
verify   run the module-label identity over all (or sampled) points.
bedard   dump every stabilizing sequence for the Lagrangian type.

Exit codes: 0 success, 1 verification or partition failure, 2 bad
configuration.  Output is deterministic for a fixed command line, and
each file embeds a header describing the tool version, the echoed
configuration, and the field modulus in use.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, bedard, dlclassify, dieudonne, weyl
from .gf import field


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _header(config: dict, ctx=None) -> dict:
    head = {"tool": "dlstrata", "version": __version__, "config": config}
    if ctx is not None:
        head["field"] = {"p": ctx.p, "k": ctx.k, "modulus": list(ctx.modulus)}
    return head


def _emit_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_lines(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_strata(args) -> int:
    if not 1 <= args.c <= 6:
        print("strata requires 1 <= c <= 6", file=sys.stderr)
        return 2
    if args.g is not None and args.g < 2 * args.c:
        print("lift requires g >= 2c", file=sys.stderr)
        return 2
    rows = bedard.stratum_table(args.c, args.g)
    config = {"command": "strata", "c": args.c, "g": args.g}
    _emit_json({"header": _header(config), "rows": rows}, args.out)
    return 0


def cmd_census(args) -> int:
    if not _is_prime(args.p):
        print(f"p = {args.p} is not prime", file=sys.stderr)
        return 2
    try:
        ctx = field(args.p, 2 * args.m)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    config = {"command": "census", "c": args.c, "p": args.p, "m": args.m}
    try:
        records = dlclassify.census(args.c, args.p, args.m)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"census failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "csv":
        lines = [
            f"# tool=dlstrata version={__version__}",
            f"# config c={args.c} p={args.p} m={args.m}",
            f"# field p={ctx.p} k={ctx.k} modulus={list(ctx.modulus)}",
        ] + dlclassify.census_csv_rows(records)
        _emit_lines(lines, args.out)
    else:
        payload = {
            "header": _header(config, ctx),
            "rows": dlclassify.census_json_rows(records),
        }
        _emit_json(payload, args.out)
    return 0


def cmd_verify(args) -> int:
    if not _is_prime(args.p):
        print(f"p = {args.p} is not prime", file=sys.stderr)
        return 2
    if args.g < 2 * args.c:
        print("verify requires g >= 2c", file=sys.stderr)
        return 2
    try:
        field(args.p, 2 * args.m)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    points = dlclassify._cached_lagrangians(args.c, args.p, args.m)
    if args.trials and args.trials < len(points):
        rng = np.random.default_rng(args.seed)
        idx = rng.choice(len(points), size=args.trials, replace=False)
        points = [points[int(i)] for i in sorted(idx)]
    passed: dict[tuple[int, ...], list[int]] = {}
    ok = True
    for u in points:
        fine = dlclassify.classify_fine(u, check=False)
        good = dieudonne.verify_pullback(u, args.g)
        ok &= good
        tally = passed.setdefault(fine.perm, [0, 0])
        tally[0] += int(good)
        tally[1] += 1
    for w in weyl.enumerate_IW(args.c):
        if w.perm in passed:
            word = " ".join(map(str, weyl.reduced_word(w))) or "e"
            got, total = passed[w.perm]
            print(f"stratum {word}: {got}/{total} passed")
    print(f"verify: {'PASS' if ok else 'FAIL'} over {len(points)} points")
    return 0 if ok else 1


def cmd_bedard(args) -> int:
    if not 1 <= args.c <= 5:
        print("bedard requires 1 <= c <= 5", file=sys.stderr)
        return 2
    I = weyl.siegel_type(args.c)
    F = bedard.FrobeniusAction.trivial(args.c)
    rows = []
    for seq in bedard.enumerate_sequences(args.c, I, F):
        rows.append(
            {
                "u_inf": list(seq.u_inf.perm),
                "I_inf": sorted(seq.I_inf),
                "steps": [
                    {"u": list(u.perm), "I": sorted(t)} for u, t in seq.steps
                ],
            }
        )
    config = {"command": "bedard", "c": args.c}
    _emit_json({"header": _header(config), "rows": rows}, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlstrata",
        description="stratum tables, censuses and module-label verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_strata = sub.add_parser("strata", help="fine stratum table for rank c")
    p_strata.add_argument("--c", type=int, required=True)
    p_strata.add_argument("--g", type=int, default=None)
    p_strata.add_argument("--out", default=None)
    p_strata.set_defaults(func=cmd_strata)

    p_census = sub.add_parser("census", help="classify all Lagrangian points")
    p_census.add_argument("--c", type=int, required=True)
    p_census.add_argument("--p", type=int, required=True)
    p_census.add_argument("--m", type=int, required=True)
    p_census.add_argument("--format", choices=("json", "csv"), default="json")
    p_census.add_argument("--out", default=None)
    p_census.set_defaults(func=cmd_census)

    p_verify = sub.add_parser("verify", help="module label against lifted fine label")
    p_verify.add_argument("--c", type=int, required=True)
    p_verify.add_argument("--g", type=int, required=True)
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_bedard = sub.add_parser("bedard", help="dump the stabilizing sequences")
    p_bedard.add_argument("--c", type=int, required=True)
    p_bedard.add_argument("--out", default=None)
    p_bedard.set_defaults(func=cmd_bedard)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
