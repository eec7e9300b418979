"""Command-line interface.

Exit codes: 0 success / property holds, 1 mismatch / property fails,
2 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import prime_field
from .bounds import FAMILIES, FAMILY_PARAMS, bound_table, comparison_rows
from .constructions import (
    bose_chowla,
    derksen_set,
    gt_modular,
    ruzsa_modular,
    singer_generalized,
)
from .errors import BhError
from .groups import ModReduction
from .properties import reduction_bound_trials
from .reduction import bc_g, cardinality_preserved, gt_g, reduce_mod, ruzsa_g
from .reproduce import all_gated_pass, match_representation, reproduce
from .sets import BhSet
from .verifier import ENUMERATION_CAP, verify


def int_list(text: str) -> list:
    """Parse ``1,2,5`` or ``2..31`` (inclusive) or a mix of both."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def table(rows: list, headers: list) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def emit(args, obj: dict, text: str | None = None):
    if args.json or text is None:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _theta(text):
    if text is None or text == "auto":
        return None
    if "x" in text:
        return text
    vals = int_list(text)
    return vals if len(vals) > 1 else vals[0]


def _modulus(text):
    return None if text is None else int_list(text)


def _read_set(path: str) -> BhSet:
    if path == "-":
        return BhSet.loads(sys.stdin.read())
    with open(path) as fh:
        return BhSet.loads(fh.read())


def _write_set(args, A: BhSet):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(A.dumps() + "\n")


def _set_text(A: BhSet) -> str:
    lines = [
        f"group      {A.group}",
        f"h          {A.h}",
        f"claimed_g  {A.claimed_g}",
        f"size       {len(A)}",
        f"elements   {A.values()}",
    ]
    for step in A.chain:
        lines.append(
            f"hom        {step['hom']['kind']} |Ker|={step['claimed_g_factor']} "
            f"size {step['size_before']} -> {step['size_after']}"
        )
    return "\n".join(lines)


def cmd_construct(args) -> int:
    theta = _theta(args.theta)
    mod = _modulus(args.modulus)
    c = args.construction
    if c == "bose-chowla":
        A = bc_g(args.q, args.h, theta, args.g, mod) if args.g > 1 else bose_chowla(args.q, args.h, theta, mod)
    elif c == "ruzsa":
        A = ruzsa_g(args.p, theta, args.g) if args.g > 1 else ruzsa_modular(args.p, theta)
    elif c == "gt":
        A = gt_g(args.p, args.h, theta, args.g, mod) if args.g > 1 else gt_modular(args.p, args.h, theta, mod)
    elif c == "singer":
        A = singer_generalized(args.q, args.m, theta, mod)
    elif c == "derksen":
        A = derksen_set(prime_field(args.p), int_list(args.poly), int_list(args.S))
    else:  # pragma: no cover - argparse restricts choices
        raise BhError(f"unknown construction {c}")
    _write_set(args, A)
    emit(args, A.to_json(), _set_text(A))
    return 0


def cmd_reduce(args) -> int:
    A = _read_set(args.set)
    B = reduce_mod(A, args.g)
    verdict = cardinality_preserved(A, ModReduction(A.group.N, args.g))
    _write_set(args, B)
    obj = B.to_json()
    obj["cardinality_preserved"] = verdict.preserved
    if verdict.witness:
        obj["witness"] = list(verdict.witness)
    text = _set_text(B) + f"\npreserved  {verdict.preserved}"
    if verdict.witness:
        text += f" (witness {verdict.witness[0]} - {verdict.witness[1]} in kernel)"
    emit(args, obj, text)
    return 0


def cmd_verify(args) -> int:
    if args.set:
        A = _read_set(args.set)
    elif args.N is not None and args.elements:
        A = BhSet.cyclic(args.N, int_list(args.elements), args.h or 2)
    else:
        raise BhError("give a set file or --N with --elements")
    h = args.h or A.h
    rep = verify(A, h, cap=args.cap)
    g = args.g if args.g is not None else A.claimed_g
    ok = rep.exact_g <= g
    obj = rep.to_json()
    obj["queried_g"] = g
    obj["holds"] = ok
    lines = [
        f"h={h}  |A|={rep.set_size}  |G|={rep.group_order}  multisets={rep.multisets_enumerated}",
        f"g* = {rep.exact_g}  (queried g = {g}: {'holds' if ok else 'FAILS'})",
    ]
    shown = rep.witnesses[: args.show]
    rows = [
        (A.group.element_to_json(t), " = ".join("+".join(str(A.group.element_to_json(a)) for a in r) for r in reps))
        for t, reps in shown
    ]
    if rows:
        lines.append(table(rows, ["target", "representations"]))
    if len(rep.witnesses) > len(shown) or rep.truncated:
        lines.append(f"... {len(rep.witnesses)} witness targets stored" + (" (truncated)" if rep.truncated else ""))
    emit(args, obj, "\n".join(lines))
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    if args.compare:
        rows = comparison_rows(witness=True)
        if args.json:
            for r in rows:
                print(json.dumps({
                    "N": r["N"], "g": r["g"],
                    "ours": r["ours"].to_json(), "martin_obryant": r["martin_obryant"].to_json(),
                }, sort_keys=True))
        else:
            print(table(
                [(f"f_2({r['N']},{r['g']})", r["ours"].bound_value, r["ours"].parameters,
                  r["martin_obryant"].bound_value, r["martin_obryant"].parameters) for r in rows],
                ["quantity", "ours", "from", "Martin-O'Bryant", "from"],
            ))
        return 0
    if not args.family:
        raise BhError("--family is required unless --compare is given")
    ranges = {}
    for name in FAMILY_PARAMS[args.family]:
        val = getattr(args, name)
        if val is None:
            raise BhError(f"family {args.family} needs --{name}")
        ranges[name] = int_list(val)
    records, notes = bound_table(args.family, ranges, witness=args.witness)
    bad = [r for r in records if r.achieved is not None and (r.achieved != r.bound_value or r.measured_g > r.g)]
    if args.json:
        for r in records:
            print(json.dumps(r.to_json(), sort_keys=True))
        for n in notes:
            print(json.dumps({"note": n}))
    else:
        rows = []
        for r in records:
            b = r.bound_value if isinstance(r.bound_value, int) else f"{r.bound_value:.6g}"
            row = [r.parameters, r.modulus_N, r.h, r.g, b]
            if args.witness:
                row += [r.achieved if r.achieved is not None else "-", r.measured_g if r.measured_g is not None else "-"]
            rows.append(row)
        headers = ["params", "N", "h", "g", "bound"] + (["achieved", "g*"] if args.witness else [])
        print(table(rows, headers))
        for n in notes:
            print(n)
    return 1 if bad else 0


def cmd_reproduce(args) -> int:
    results = reproduce(recover=not args.no_recover)
    ok = all_gated_pass(results)
    trials = None
    if args.trials:
        trials = reduction_bound_trials(args.trials, args.seed)
        ok = ok and trials.ok
    if args.json:
        for r in results:
            print(json.dumps(r.to_json(), sort_keys=True, default=str))
        if trials is not None:
            print(json.dumps({"case": "randomized reductions", "trials": trials.trials,
                              "violations": trials.violations, "pass": trials.ok}))
    else:
        rows = []
        for r in results:
            status = ("PASS" if r.passed else "FAIL") if r.gated else ("found" if r.passed else "info")
            rows.append((status, r.case, _short(r.expected), _short(r.measured)))
        if trials is not None:
            rows.append(("PASS" if trials.ok else "FAIL", f"randomized reductions (seed {args.seed})",
                         f"{trials.trials} trials", f"{len(trials.violations)} violations"))
        print(table(rows, ["status", "case", "expected", "measured"]))
        gated = [r for r in results if r.gated]
        print(f"\n{sum(r.passed for r in gated)}/{len(gated)} gated cases pass")
    return 0 if ok else 1


def _short(v, width: int = 60) -> str:
    s = json.dumps(v, default=str) if not isinstance(v, str) else v
    return s if len(s) <= width else s[: width - 3] + "..."


def cmd_match(args) -> int:
    construction = "gt" if args.construction == "gt" else "bose-chowla"
    res = match_representation(args.q, args.h, int_list(args.target), _theta_for_match(args.theta),
                               construction, find_all=args.all)
    obj = {
        "found": res.found,
        "modulus": list(res.field.modulus) if res.found else None,
        "matches": [list(F.modulus) for F in res.matches],
        "moduli_scanned": res.scanned,
        "theta_primitive_under": res.primitive,
    }
    if res.found:
        text = f"found modulus {res.field} (scanned {res.scanned}, theta primitive under {res.primitive})"
        if args.all:
            text += "\nall matches: " + ", ".join(str(list(F.modulus)) for F in res.matches)
    else:
        text = f"NotFound after {res.scanned} moduli (theta primitive under {res.primitive})"
    emit(args, obj, text)
    return 0 if res.found else 1


def _theta_for_match(text):
    if "x" in text:
        return text
    return int_list(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="line-delimited JSON output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized checks")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"multiset enumeration cap (default {ENUMERATION_CAP})")

    parser = argparse.ArgumentParser(prog="bhsets", description="B_h[g] set constructions and verification")
    parser.add_argument("--json", action="store_true", help="line-delimited JSON output")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="multiset enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a base or reduced set")
    p.add_argument("construction", choices=["bose-chowla", "ruzsa", "gt", "singer", "derksen"])
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--m", type=int, help="extension degree over F_q (singer)")
    p.add_argument("--g", type=int, default=1, help="apply the reduction with kernel size g")
    p.add_argument("--theta", default="auto",
                   help="primitive element (notation like -2x^2+2x-1, coefficients c0,c1,..., or auto)")
    p.add_argument("--modulus", help="irreducible modulus coefficients, constant term first")
    p.add_argument("--poly", help="derksen: polynomial coefficients, constant term first")
    p.add_argument("--S", help="derksen: elements of F_p")
    p.add_argument("-o", "--output", help="also write the set JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reduce", parents=[common], help="mod-reduce a cyclic set by g")
    p.add_argument("set", help="set JSON file, or - for stdin")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="measure g* by brute force")
    p.add_argument("set", nargs="?", help="set JSON file, or - for stdin")
    p.add_argument("--N", type=int, help="cyclic group order for --elements")
    p.add_argument("--elements")
    p.add_argument("--h", type=int)
    p.add_argument("--g", type=int, help="queried g (default: the set's claimed_g)")
    p.add_argument("--show", type=int, default=10, help="witness targets to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="lower-bound tables")
    p.add_argument("--family", choices=FAMILIES)
    for name in ("p", "q", "h", "g", "k", "N"):
        p.add_argument(f"--{name}", help="comma list or lo..hi range")
    p.add_argument("--witness", action="store_true", help="construct and verify witnesses")
    p.add_argument("--compare", action="store_true", help="show the Martin-O'Bryant comparison")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("reproduce", parents=[common], help="replay the worked examples")
    p.add_argument("--no-recover", action="store_true", help="skip modulus recovery")
    p.add_argument("--trials", type=int, default=0, help="randomized reduction trials to add")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("match", parents=[common], help="recover a modulus from a printed set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--construction", choices=["bose-chowla", "gt"], default="bose-chowla")
    p.add_argument("--all", action="store_true", help="list every matching modulus")
    p.set_defaults(func=cmd_match)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BhError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
