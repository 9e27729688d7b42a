"""Command-line interface.

Subcommands mirror the library: ``info``, ``buchweitz``, ``pf-check``,
``seq check``, ``seq paste``, ``decompose`` and ``census``. Numeric list
arguments are comma-separated decimals without spaces. Domain errors
exit with status 1 and the error class name; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import buchweitz, census, core, decompose, pfseq
from .errors import SemigroupError

__all__ = ["main"]


def _semigroup_from_args(args) -> core.Semigroup:
    if args.gens is not None:
        return core.from_generators(core.parse_int_list(args.gens))
    body = args.gaps
    return core.from_gaps(core.parse_int_list(body) if body else ())


def _add_semigroup_options(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--gens", metavar="L", help="generators, e.g. 5,7,11,13")
    grp.add_argument("--gaps", metavar="L", help="gap set, e.g. 1,2,3,4,6,8,9")


def _add_format_option(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("human", "json"), default="human")


def cmd_info(args) -> int:
    s = _semigroup_from_args(args)
    data = {
        "gaps": list(s.gaps),
        "generators": list(core.minimal_generators(s)),
        "multiplicity": s.multiplicity,
        "genus": s.genus,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "type": s.type,
        "pseudo_frobenius": list(s.pf),
        "schubert_index": list(core.schubert_index(s)),
    }
    if args.format == "json":
        print(json.dumps(data))
        return 0
    print("gaps:", ",".join(map(str, s.gaps)))
    print("generators:", ",".join(map(str, data["generators"])))
    print(f"multiplicity: {s.multiplicity}  genus: {s.genus}  "
          f"frobenius: {s.frobenius}  conductor: {s.conductor}  type: {s.type}")
    print("pseudo-frobenius:", ",".join(map(str, s.pf)))
    print("schubert index:", ",".join(map(str, data["schubert_index"])))
    return 0


def cmd_buchweitz(args) -> int:
    s = _semigroup_from_args(args)
    rep = buchweitz.buchweitz_test(s, args.n)
    if args.format == "json":
        print(json.dumps({"n": rep.n, "cardinality": rep.cardinality,
                          "threshold": rep.threshold,
                          "is_buchweitz": rep.is_buchweitz}))
        return 0
    print(f"n: {rep.n}")
    print(f"sumset cardinality: {rep.cardinality}")
    print(f"threshold: {rep.threshold}")
    print("buchweitz:", "true" if rep.is_buchweitz else "false")
    return 0


def cmd_pf_check(args) -> int:
    s = _semigroup_from_args(args)
    reason = pfseq.pf_failure_reason(s) if not s.is_natural else "the full monoid has no gaps"
    if args.format == "json":
        print(json.dumps({"is_pf": reason is None, "reason": reason}))
        return 0
    if reason is None:
        print("true")
    else:
        print("false")
        print(f"reason: {reason}")
    return 0


def cmd_seq_check(args) -> int:
    diffs, _ = pfseq.parse_seq_label(_with_prefix(args.sequence))
    verdict = pfseq.sufficient_bound(diffs)
    if args.genus is not None:
        window = (args.genus, args.genus)
    elif args.window is not None:
        lo, _, hi = args.window.partition("..")
        window = (int(lo), int(hi))
    elif verdict.bound is not None:
        window = (verdict.bound, verdict.bound + 20)
    else:
        window = None
    checked = []
    if window is not None:
        for g in range(window[0], window[1] + 1):
            try:
                checked.append((g, pfseq.verify_sequence(diffs, g)))
            except SemigroupError:
                checked.append((g, False))
    if args.format == "json":
        print(json.dumps({"sequence": list(diffs), "t": verdict.t,
                          "pair_sums": verdict.pair_sums,
                          "bound": verdict.bound,
                          "checked": [[g, ok] for g, ok in checked]}))
        return 0
    print(f"sequence: {pfseq.seq_label(diffs)} (type {verdict.t})")
    print(f"pair sums: {verdict.pair_sums} distinct "
          f"(needs > {3 * (verdict.t - 1)})")
    if verdict.bound is None:
        print("sufficient bound: none (pair-sum condition fails)")
    else:
        print(f"sufficient bound: genus >= {verdict.bound}")
    for g, ok in checked:
        print(f"genus {g}: {'true' if ok else 'false'}")
    return 0


def cmd_seq_paste(args) -> int:
    head, head_genus = pfseq.parse_seq_label(_with_prefix(args.head))
    tail, tail_genus = pfseq.parse_seq_label(_with_prefix(args.tail))
    if head_genus is None or tail_genus is None:
        raise ValueError("paste operands need a genus, e.g. 1,4,3@22")
    combined, bound = pfseq.paste(head, head_genus, tail, tail_genus, args.k)
    if args.format == "json":
        print(json.dumps({"sequence": list(combined), "bound": bound}))
        return 0
    print(pfseq.seq_label(combined, bound))
    return 0


def _with_prefix(text: str) -> str:
    return text if text.startswith("seq:") else "seq:" + text


def cmd_decompose(args) -> int:
    s = _semigroup_from_args(args)
    blocks = decompose.decompose_pf(s)
    if args.format == "json":
        print(json.dumps([{"gaps": list(b.semigroup.gaps), "genus": b.genus,
                           "parity": b.parity} for b in blocks]))
        return 0
    for b in blocks:
        print(core.gaps_label(b.semigroup))
    return 0


def cmd_census(args) -> int:
    threads = args.threads if args.threads is not None else census.default_threads()
    rows = census.census_range(getattr(args, "from"), args.to, threads)
    if args.csv is not None:
        text = census.rows_to_csv(rows)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            with open(args.csv, "w") as fh:
                fh.write(text)
        return 0
    print(f"{'genus':>5} {'ns':>10} {'b2s':>8} {'b2pfs':>8}")
    for r in rows:
        print(f"{r.genus:>5} {r.ns:>10} {r.b2s:>8} {r.b2pfs:>8}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Exact computation with numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariants, PF set and Schubert index")
    _add_semigroup_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("buchweitz", help="n-fold gap sumset test")
    _add_semigroup_options(p)
    p.add_argument("--n", type=int, required=True)
    _add_format_option(p)
    p.set_defaults(func=cmd_buchweitz)

    p = sub.add_parser("pf-check", help="PF gap-profile predicate")
    _add_semigroup_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_pf_check)

    seq = sub.add_parser("seq", help="difference-sequence operations")
    seqsub = seq.add_subparsers(dest="seq_command", required=True)

    p = seqsub.add_parser("check", help="sufficient bound and direct checks")
    p.add_argument("sequence", help="e.g. 1,3,3,2")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--genus", type=int)
    grp.add_argument("--window", metavar="A..B")
    _add_format_option(p)
    p.set_defaults(func=cmd_seq_check)

    p = seqsub.add_parser("paste", help="splice two verified sequences")
    p.add_argument("head", help="prefix sequence with genus, e.g. 1,4,3@22")
    p.add_argument("tail", help="suffix sequence with genus, e.g. 2,4,3@23")
    p.add_argument("--k", type=int, required=True)
    _add_format_option(p)
    p.set_defaults(func=cmd_seq_paste)

    p = sub.add_parser("decompose", help="stair blocks of a PF-profile semigroup")
    _add_semigroup_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("census", help="per-genus counts")
    p.add_argument("--from", type=int, required=True, dest="from")
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--csv", metavar="PATH", help="write CSV; '-' for stdout")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
