"""Command-line front end: counting, enumeration and batch verification.

stdout carries results (JSON with --json); progress and timing go to
stderr.  A fixed seed determines every random point, and per-instance
seeds are derived from the instance key, so identical configurations
produce byte-identical JSON regardless of --jobs.

Exit codes: 0 all pass, 1 identity violated, 2 parse error,
3 method/shape mismatch, 4 sampling exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import hooks, schur
from .algebra import check_det_identities
from .errors import HooklabError, NotAPartition, ParseError
from .excitations import enumerate_excitations
from .partitions import (
    format_shape,
    normalize_partition,
    parse_partition,
    parse_shape,
    partitions_in_box,
    size,
    subpartitions,
)
from .report import EXHAUSTED, FAIL, Report, summarize
from .tableaux import (
    Flagging,
    count_syt,
    enumerate_fssyt,
    enumerate_ssyt,
    enumerate_syt,
    induced_flagging,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_EXHAUSTED = 4

IDENTITIES = (
    "main",
    "naruse",
    "konvalinka",
    "konvalinka-variant",
    "jt",
    "h-recursions",
    "det-identities",
    "z-recursion",
    "rhs-recursion",
    "w-identities",
)


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _int_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'A,B', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected integers in {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklab")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count standard tableaux of a shape")
    p_count.add_argument("--shape", required=True, help='skew shape, e.g. "3,2/1"')
    p_count.add_argument("--method", choices=("enum", "naruse", "hlf"), default="enum")
    p_count.add_argument("--json", action="store_true")

    p_list = sub.add_parser("list", help="enumerate combinatorial objects")
    p_list.add_argument("kind", choices=("syt", "ssyt", "fssyt", "excitations"))
    p_list.add_argument("--shape", help='skew shape "lam/mu" (syt, excitations, --induced)')
    p_list.add_argument("--shape-mu", help="straight shape for ssyt/fssyt")
    p_list.add_argument("--cap", type=int, help="entry cap for ssyt")
    p_list.add_argument("--flags", help='comma-separated per-row bounds, e.g. "2,3,3"')
    p_list.add_argument("--induced", action="store_true",
                        help="use the flagging induced by --shape")
    p_list.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="machine-verify an identity over a scope")
    p_verify.add_argument("identity", choices=IDENTITIES)
    p_verify.add_argument("--shape", help="single skew shape")
    p_verify.add_argument("--box", help='"R,C": all lam in the box, all mu inside lam')
    p_verify.add_argument("--trials", type=int, default=3)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--a-max", type=int, default=5)
    p_verify.add_argument("--b-max", type=int, default=4)
    p_verify.add_argument("--c-range", default="-4,4")
    p_verify.add_argument("--dims", default="1,2,3,4", help="dimensions for det-identities")
    p_verify.add_argument("--max-flag", type=int, default=4, help="flag bound for jt")
    p_verify.add_argument("--json", action="store_true")
    return parser


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("HOOKLAB_SEED")
    return int(env) if env else 0


def _shape_scope(args) -> list[tuple[tuple, tuple]]:
    if args.shape and args.box:
        raise ParseError("give either --shape or --box, not both")
    if args.shape:
        lam, mu = parse_shape(args.shape)
        lam = normalize_partition(lam)
        mu = normalize_partition(mu)
        return [(lam, mu)]
    if args.box:
        rows, cols = _int_pair(args.box)
        pairs = []
        for lam in partitions_in_box(rows, cols):
            for mu in subpartitions(lam):
                pairs.append((lam, mu))
        pairs.sort(key=lambda p: (size(p[0]), p[0], size(p[1]), p[1]))
        return pairs
    raise ParseError("a scope is required: --shape or --box")


def cmd_count(args) -> int:
    lam, mu = parse_shape(args.shape)
    if args.method == "hlf" and mu:
        print("error: method hlf requires an empty inner shape", file=sys.stderr)
        return EXIT_MISMATCH
    if args.method == "enum":
        value = count_syt(lam, mu)
    elif args.method == "naruse":
        value = hooks.naruse_count(lam, mu)
        value = int(value) if value.denominator == 1 else value
    else:
        value = hlf = hooks.hlf_count(lam)
        value = int(hlf) if hlf.denominator == 1 else hlf
    if args.json:
        print(_json_dump({"command": "count", "method": args.method,
                          "shape": format_shape(lam, mu), "value": value}))
    else:
        print(value)
    return EXIT_OK


def _parse_flags(text: str) -> Flagging:
    prefix = tuple(int(v) for v in text.split(","))
    if any(v < 1 for v in prefix):
        raise NotAPartition("flag bounds must be positive")
    return Flagging(prefix=prefix, tail="constant")


def cmd_list(args) -> int:
    kind = args.kind
    if kind in ("syt", "excitations"):
        if not args.shape:
            print("error: --shape is required", file=sys.stderr)
            return EXIT_MISMATCH
        lam, mu = parse_shape(args.shape)
        if kind == "syt":
            payload = [t.to_rows() for t in enumerate_syt(lam, mu)]
        else:
            payload = [[list(b) for b in sorted(e)] for e in enumerate_excitations(lam, mu)]
    else:
        if not args.shape_mu:
            print("error: --shape-mu is required", file=sys.stderr)
            return EXIT_MISMATCH
        mu = parse_partition(args.shape_mu)
        if kind == "ssyt":
            if args.cap is None:
                print("error: ssyt needs --cap", file=sys.stderr)
                return EXIT_MISMATCH
            payload = [t.to_rows() for t in enumerate_ssyt(mu, args.cap)]
        else:
            if args.flags:
                flags = _parse_flags(args.flags)
            elif args.induced and args.shape:
                lam, inner = parse_shape(args.shape)
                if normalize_partition(inner) != mu:
                    print("error: --shape inner part must match --shape-mu",
                          file=sys.stderr)
                    return EXIT_MISMATCH
                flags = induced_flagging(lam, mu)
            else:
                print("error: fssyt needs --flags or --induced with --shape",
                      file=sys.stderr)
                return EXIT_MISMATCH
            payload = [t.to_rows() for t in enumerate_fssyt(mu, flags)]
    print(_json_dump(payload))
    return EXIT_OK


def _verify_reports(args, seed: int) -> list[Report]:
    identity = args.identity
    if identity == "h-recursions":
        c_lo, c_hi = _int_pair(args.c_range)
        return schur.check_h_recursions(args.a_max, args.b_max, (c_lo, c_hi))
    if identity == "det-identities":
        reports = []
        for n in (int(v) for v in args.dims.split(",")):
            reports.extend(check_det_identities(n, trials=args.trials, seed=seed))
        return reports
    if identity == "jt":
        return _verify_jt(args, seed)

    pairs = _shape_scope(args)
    if identity in ("konvalinka", "konvalinka-variant", "z-recursion", "rhs-recursion"):
        pairs = [(lam, mu) for lam, mu in pairs if lam != mu]

    def run(pair):
        lam, mu = pair
        if identity == "main":
            return hooks.verify_main(lam, mu, trials=args.trials, seed=seed)
        if identity == "naruse":
            expected = count_syt(lam, mu)
            got = hooks.naruse_count(lam, mu)
            ok = got == expected
            return Report(
                identity="naruse",
                instance={"lambda": list(lam), "mu": list(mu)},
                status="pass" if ok else "fail",
                witness=None if ok else {"enumerated": expected, "formula": str(got)},
            )
        if identity == "konvalinka":
            return schur.konvalinka_check(lam, mu)
        if identity == "konvalinka-variant":
            return schur.konvalinka_variant_check(lam, mu)
        if identity == "z-recursion":
            return hooks.verify_z_recursion(lam, mu, trials=args.trials, seed=seed)
        if identity == "rhs-recursion":
            return hooks.verify_rhs_recursion(lam, mu, trials=args.trials, seed=seed)
        if identity == "w-identities":
            return hooks.check_w_identities(lam, mu, trials=args.trials, seed=seed)
        raise ValueError(identity)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(run, pairs))
    return [run(p) for p in pairs]


def _weakly_increasing_flag_tuples(length: int, cap: int):
    def rec(prefix, lo):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(lo, cap + 1):
            yield from rec(prefix + [v], v)

    yield from rec([], 1)


def _verify_jt(args, seed: int) -> list[Report]:
    if args.box:
        rows, cols = _int_pair(args.box)
        mus = partitions_in_box(rows, cols)
    elif args.shape:
        mus = [normalize_partition(parse_shape(args.shape)[0])]
    else:
        raise ParseError("jt needs --box or --shape")
    reports = []
    for mu in mus:
        n = max(len(mu), 1)
        for prefix in _weakly_increasing_flag_tuples(n, args.max_flag):
            b = Flagging(prefix=prefix, tail="constant")
            lhs = schur.jt_general_sum(mu, b, schur.u_from_xy, n)
            rhs = schur.jt_general_det(mu, b, schur.u_from_xy, n)
            ok = lhs == rhs
            reports.append(Report(
                identity="jt-sum-vs-det",
                instance={"mu": list(mu), "b": list(prefix)},
                status="pass" if ok else "fail",
                witness=None if ok else {"lhs": lhs.to_text(), "rhs": rhs.to_text()},
            ))
            reports.append(schur.check_twisted_cancellation(mu, b, n))
    return reports


def cmd_verify(args) -> int:
    seed = _default_seed(args)
    t0 = time.perf_counter()
    reports = _verify_reports(args, seed)
    elapsed = time.perf_counter() - t0
    summary = summarize(reports)
    print(f"verified {summary['total']} instances in {elapsed:.2f}s", file=sys.stderr)
    if args.json:
        payload = {
            "command": "verify",
            "identity": args.identity,
            "config": {
                "seed": seed,
                "trials": args.trials,
                "scope": args.shape or args.box or "",
            },
            "results": [r.to_json_obj() for r in reports],
            "summary": summary,
        }
        print(_json_dump(payload))
    else:
        for r in reports:
            print(f"{r.status.upper():4s}  {r.identity}  {_json_dump(r.instance)}")
        print(f"total={summary['total']} passed={summary['passed']} "
              f"failed={summary['failed']} exhausted={summary['exhausted']}")
    if summary["failed"]:
        return EXIT_VIOLATED
    if summary["exhausted"]:
        return EXIT_EXHAUSTED
    return EXIT_OK


def _fuse_range_flags(argv: list[str]) -> list[str]:
    # argparse would mistake a leading '-' in "--c-range -4,4" for an option
    out = []
    skip = False
    for pos, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--c-range" and pos + 1 < len(argv):
            out.append(f"--c-range={argv[pos + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_fuse_range_flags(list(argv)))
    try:
        if args.command == "count":
            return cmd_count(args)
        if args.command == "list":
            return cmd_list(args)
        return cmd_verify(args)
    except (ParseError, NotAPartition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HooklabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
