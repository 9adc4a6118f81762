"""Command-line front end.

    gccodes blocks -n 17 -q 2 -r 2 --complete
    gccodes code -n 17 -B 2,8,9,15
    gccodes enumerator -n 5 -B 1,4 --mode both
    gccodes dna -n 13 -B qr --construct even --out qr13

All JSON output carries ``"schema": 1``.  The exit status is 0 iff every
requested check passed; failures print a JSON object with ``"ok": false``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd
from pathlib import Path

from . import codes as cc
from .cyclotomic import (
    Block,
    enumerate_blocks,
    galois_supplemented_exists,
    orbit_table,
    quadratic_residues,
)
from .dna import (
    build_even_subcode_codebook,
    build_rc_pair_split_codebook,
    lower_bound,
    complete_code_bound,
    verify_codebook,
)
from .enumerators import WeightEnumerator
from .field import prime_power
from .span import GuardExceeded, default_guard

SCHEMA = 1


class CliError(Exception):
    def __init__(self, message: str, **extra):
        super().__init__(message)
        self.extra = extra


def _emit(obj: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n")


def parse_block(spec: str, n: int, q: int, r: int) -> Block:
    table = orbit_table(n, q, r)
    spec = spec.strip().lower()
    if spec == "qr":
        elems = quadratic_residues(n)
    elif spec in ("", "none", "empty"):
        elems = ()
    else:
        try:
            elems = [int(x) for x in spec.split(",") if x.strip()]
        except ValueError:
            raise CliError(f"cannot parse block {spec!r}") from None
    return table.block(elems)


def _symbol(sf, idx: int) -> str:
    if sf.size == 4:
        return ("0", "1", "w", "w2")[idx]
    return str(idx)


def format_poly(coeffs, sf) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        sym = _symbol(sf, c)
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(sym)
        elif sym == "1":
            terms.append(mono)
        else:
            terms.append(f"{sym}*{mono}")
    return " + ".join(terms) or "0"


def _common(p: argparse.ArgumentParser, block: bool = True) -> None:
    p.add_argument("-n", type=int, required=True, help="code length")
    p.add_argument("-q", type=int, default=2, help="base field order")
    p.add_argument("-r", type=int, default=2, help="extension degree")
    if block:
        p.add_argument("-B", "--block", default="qr", help="comma list of elements, or 'qr'")
    p.add_argument("--guard", type=int, default=None, help="max words to enumerate (env GCCODES_GUARD)")
    p.add_argument("--threads", "--workers", dest="workers", type=int, default=1,
                   help="enumeration worker threads")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled verification")
    p.add_argument("--output", choices=("json", "csv", "fasta"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gccodes", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks", help="list q^r-blocks")
    _common(p, block=False)
    for flag in ("complete", "reversible", "selfdual"):
        p.add_argument(f"--{flag}", action="store_true")
    p.add_argument("--size", type=int)
    p.add_argument("--max-n", type=int, default=255)

    p = sub.add_parser("code", help="construct C_B")
    _common(p)

    p = sub.add_parser("enumerator", help="F_q-weight distribution")
    _common(p)
    p.add_argument("--mode", choices=("closed", "brute", "both"), default="closed")
    p.add_argument("--subcode", choices=("none", "even", "extended"), default="none")

    p = sub.add_parser("dna", help="constant GC-content DNA codebook")
    _common(p)
    p.add_argument("--construct", choices=("even", "rc"), default="even")
    p.add_argument("-d", type=int, default=None, help="claimed minimum distance (computed if omitted)")
    p.add_argument("--out", default=None, help="output prefix for .fasta and .json")
    p.add_argument("--bound-only", action="store_true")
    return ap


def cmd_blocks(args) -> int:
    n, q, r = args.n, args.q, args.r
    table = orbit_table(n, q, r)
    exists = galois_supplemented_exists(n, q, r)
    blocks = enumerate_blocks(
        table,
        complete=True if args.complete else None,
        reversible=True if args.reversible else None,
        selfdual=True if args.selfdual else None,
        size=args.size,
        max_n=args.max_n,
    )
    out = {
        "ok": exists,
        "n": n, "q": q, "r": r,
        "ord_q_mod_n": table.s,
        "exists": exists,
        "blocks": [{"elements": list(b.elements), **b.flags()} for b in blocks],
    }
    if not exists:
        out["diagnostic"] = (
            f"no Galois supplemented codes: criterion r | ord(q mod n) fails "
            f"({r} does not divide ord({q} mod {n}) = {table.s})"
        )
    _emit(out)
    return 0 if exists else 1


def cmd_code(args) -> int:
    B = parse_block(args.block, args.n, args.q, args.r)
    C = cc.code_from_block(B)
    sf = C.coefficient_field
    gen = [sf.idx(c) for c in C.generator.coeffs]
    e = cc.idempotent(C)
    try:
        d = cc.min_distance(C, args.guard, args.workers)
    except GuardExceeded as exc:
        d = f"not computed ({exc})"
    complete = B.is_complete
    out = {
        "ok": True,
        "n": C.n, "q": C.q, "r": C.r,
        "block": list(B.elements),
        "dimension": C.dimension,
        "generator": [_symbol(sf, c) for c in gen],
        "generator_poly": format_poly(gen, sf),
        "idempotent": format_poly([sf.idx(c) for c in e.coeffs], sf),
        "min_distance": d,
        "galois_coprime": cc.is_galois_coprime(C.generator, C.q, C.r),
        "complete": complete,
        "reversible": B.is_reversible,
        "selfdual_extended": B.is_selfdual_candidate,
    }
    _emit(out)
    return 0


def _enumerators(args, C):
    closed = brute = None
    if args.subcode == "none":
        if args.mode in ("closed", "both"):
            closed = cc.fqwe_closed(C)
        if args.mode in ("brute", "both"):
            brute = cc.fqwe_brute(C, args.guard, args.workers)
    elif args.subcode == "even":
        if args.mode in ("closed", "both"):
            closed = cc.fqwe_even_subcode(C)
        if args.mode in ("brute", "both"):
            brute = cc.fqwe_even_subcode_brute(C, args.guard)
    else:
        if args.mode in ("closed", "both"):
            closed = cc.fqwe_extended(C)
        if args.mode in ("brute", "both"):
            brute = cc.fqwe_extended_brute(C, args.guard)
    return closed, brute


def cmd_enumerator(args) -> int:
    B = parse_block(args.block, args.n, args.q, args.r)
    C = cc.code_from_block(B)
    closed, brute = _enumerators(args, C)
    main: WeightEnumerator = closed or brute
    diff = closed.diff(brute) if closed and brute else None
    ok = diff is None or not any(diff)
    if args.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["w", "count"] + (["brute", "diff"] if diff is not None else [])
        w.writerow(header)
        for i, c in enumerate(main.counts):
            row = [i, c] + ([brute.counts[i], diff[i]] if diff is not None else [])
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        out = {
            "ok": ok,
            "n": C.n, "q": C.q, "r": C.r,
            "block": list(B.elements),
            "subcode": args.subcode,
            "mode": args.mode,
            "counts": list(main.counts),
            "total": main.total,
        }
        if closed and brute:
            out["brute"] = list(brute.counts)
            out["diff"] = diff
        _emit(out)
    return 0 if ok else 1


def cmd_dna(args) -> int:
    B = parse_block(args.block, args.n, args.q, args.r)
    if (args.q, args.r) != (2, 2):
        raise CliError("DNA codes need q = 2, r = 2")
    bound = lower_bound(args.n, B)
    out = {
        "n": args.n,
        "block": list(B.elements),
        "construction": "even_subcode" if args.construct == "even" else "rc_pair_split",
        "lower_bound": bound,
        "complete_code_bound": complete_code_bound(args.n),
    }
    if args.bound_only:
        _emit({"ok": True, "d": args.d, **out})
        return 0
    C = cc.code_from_block(B)
    d = args.d if args.d is not None else cc.min_distance(C, args.guard, args.workers)
    build = build_even_subcode_codebook if args.construct == "even" else build_rc_pair_split_codebook
    book = build(C, d, args.guard)
    report = verify_codebook(book, seed=args.seed)
    if args.out:
        prefix = Path(args.out)
        book.write(prefix.with_suffix(".fasta"), prefix.with_suffix(".json"))
        out["files"] = [str(prefix.with_suffix(".fasta")), str(prefix.with_suffix(".json"))]
    if args.output == "fasta":
        sys.stdout.write(book.to_fasta())
    else:
        _emit({"ok": report.passed, "d": d, "count": len(book), "w": book.gc_weight,
               "verification": report.as_dict(), **out})
    return 0 if report.passed else 1


def check_config(n: int, q: int) -> None:
    if n < 1:
        raise CliError("n must be positive")
    try:
        prime_power(q)
    except ValueError:
        raise CliError(f"q={q} is not a prime power") from None
    if gcd(n, q) != 1:
        raise CliError(f"gcd(n, q) = {gcd(n, q)}, need n coprime to q")


COMMANDS = {"blocks": cmd_blocks, "code": cmd_code, "enumerator": cmd_enumerator, "dna": cmd_dna}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.guard is None:
        args.guard = default_guard()
    if args.guard < 1:
        _emit({"ok": False, "error": "guard must be at least 1"})
        return 2
    try:
        check_config(args.n, args.q)
    except CliError as exc:
        _emit({"ok": False, "error": str(exc)})
        return 2
    try:
        return COMMANDS[args.command](args)
    except GuardExceeded as exc:
        _emit({"ok": False, "error": str(exc), "required": exc.required, "guard": exc.guard})
    except CliError as exc:
        _emit({"ok": False, "error": str(exc), **exc.extra})
    except ValueError as exc:
        _emit({"ok": False, "error": str(exc)})
    return 1


if __name__ == "__main__":
    sys.exit(main())
