"""Command line front end.

Subcommands: analyze (invariant table for one space), verify (claim sweep),
enumerate (stream all labeled topologies at a size), oracle (brute-force
parity report), claims (list registered claim ids).

Space sources are a JSON file (--file), an inline generator spec
(--named name:params), or a seeded random space (--random n:p:seed).  JSON
output is byte-stable for fixed inputs: keys are sorted and separators
fixed, so the same seed and flags reproduce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .invariants import full_report, oracle_verbal, SpaceInvariants
from .space import (
    BudgetExceeded,
    FiniteSpace,
    NotATopology,
    UnknownName,
    enumerate_all_spaces,
    named,
    random_space,
)
from .verify import CLAIMS, UnknownClaim, sweep
from .words import all_words


def _stable_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_space(args) -> tuple[str, FiniteSpace]:
    sources = [s for s in (args.file, args.named, args.random) if s]
    if len(sources) != 1:
        raise SystemExit("exactly one of --file, --named, --random is required")
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise NotATopology(f"{args.file}:{exc.lineno}:{exc.colno}: {exc.msg}")
        return args.file, FiniteSpace.from_json(data)
    if args.named:
        return f"named:{args.named}", named(args.named)
    try:
        n_text, p_text, seed = args.random.split(":", 2)
        n, p = int(n_text), float(p_text)
    except ValueError as exc:
        raise SystemExit(f"--random expects n:p:seed, got {args.random!r} ({exc})")
    return f"random:{args.random}", random_space(n, p, seed)


def _format_table(report) -> str:
    lines = [f"space: {report.space_id}  (n = {report.space.n})"]
    width = max(len(name) for name in report.values)
    for name, value in report.values.items():
        witness = report.witnesses.get(name)
        tail = f"  witness = {witness}" if witness is not None else ""
        lines.append(f"  {name:<{width}}  {value}{tail}")
    if report.notes:
        lines.append(f"  notes: {report.notes}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    space_id, space = _load_space(args)
    report = full_report(space, space_id)
    if args.format == "json":
        _emit(_stable_json(report.to_json()), args.out)
    else:
        _emit(_format_table(report), args.out)
    return 0


def cmd_verify(args) -> int:
    claim_ids = None
    if args.claims and not args.all:
        claim_ids = [c for chunk in args.claims for c in chunk.split(",") if c]
    sizes = [int(s) for s in args.sizes.split(",") if s] if args.sizes else None
    if sizes is None:
        sizes = list(range(1, args.exhaustive + 1)) if args.exhaustive else [1, 2, 3, 4]
    report = sweep(
        claims=claim_ids,
        sizes=sizes,
        random_count=args.random_count,
        seed=args.seed,
    )
    if args.format == "json":
        _emit(_stable_json(report.to_json()), args.out)
    else:
        lines = [f"spaces processed: {report.spaces_processed}"]
        for st in report.claims:
            flag = "  [expected divergence]" if st.expected_divergence else ""
            lines.append(
                f"  {st.claim_id}: pass={st.pass_count} vacuous={st.vacuous_count} "
                f"fail={st.fail_count}{flag}"
            )
        lines.append(f"failures: {report.failure_count}")
        _emit("\n".join(lines), args.out)
    return 0 if report.failure_count == 0 else 1


def cmd_enumerate(args) -> int:
    if args.n > 4:
        raise BudgetExceeded("enumerate is exhaustive; the CLI bound is n <= 4")
    lines = [
        _stable_json(space.to_json()) for space in enumerate_all_spaces(args.n)
    ]
    _emit("\n".join(lines), args.out)
    return 0


def cmd_oracle(args) -> int:
    if args.n > 3:
        raise BudgetExceeded("oracle parity sweeps are exhaustive; the CLI bound is n <= 3")
    words = all_words(args.max_word_len)
    mismatches = []
    spaces = 0
    for space in enumerate_all_spaces(args.n):
        spaces += 1
        inv = SpaceInvariants(space)
        for word in words:
            for kind in ("ell", "ell_bar"):
                reduced = inv.verbal(kind, word)
                brute = oracle_verbal(space, kind, word)
                if reduced != brute:
                    mismatches.append(
                        {
                            "space": space.to_json(),
                            "kind": kind,
                            "word": str(word),
                            "reduced": reduced,
                            "oracle": brute,
                        }
                    )
    if args.format == "json":
        _emit(
            _stable_json(
                {
                    "n": args.n,
                    "spaces": spaces,
                    "words": len(words),
                    "mismatches": mismatches,
                }
            ),
            args.out,
        )
    else:
        _emit(
            "parity: OK" if not mismatches else f"parity: {len(mismatches)} mismatches",
            args.out,
        )
    return 0 if not mismatches else 1


def cmd_claims(args) -> int:
    if args.format == "json":
        data = [
            {
                "id": c.claim_id,
                "description": c.description,
                "expected_divergence": c.expected_divergence,
                "note": c.note,
            }
            for c in CLAIMS
        ]
        _emit(_stable_json(data), args.out)
    else:
        lines = []
        for c in CLAIMS:
            flag = " [expected divergence]" if c.expected_divergence else ""
            lines.append(f"{c.claim_id}{flag}: {c.description}")
            if c.note:
                lines.append(f"    note: {c.note}")
        _emit("\n".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercalc",
        description="Exact covering invariants of finite topological spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default="table",
                       help="output format (default: table)")

    p_an = sub.add_parser("analyze", help="full invariant table for one space")
    p_an.add_argument("--file", help="space JSON file (min_open or preorder_edges form)")
    p_an.add_argument("--named", help="inline generator spec, e.g. one_nonisolated:5")
    p_an.add_argument("--random", help="random space spec n:p:seed, e.g. 6:0.3:42")
    add_common(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run theorem claims over space sweeps")
    p_ver.add_argument("--all", action="store_true", help="run every registered claim")
    p_ver.add_argument("--claims", action="append", default=[],
                       help="comma-separated claim ids (repeatable)")
    p_ver.add_argument("--exhaustive", type=int, default=0, metavar="N",
                       help="sweep all labeled topologies up to this size (<= 4)")
    p_ver.add_argument("--sizes", help="comma-separated carrier sizes for the sweep")
    p_ver.add_argument("--random-count", type=int, default=0,
                       help="seeded random spaces per size (default: 0)")
    p_ver.add_argument("--seed", default="0",
                       help="sweep seed; identical seeds reproduce identical output (default: 0)")
    add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_en = sub.add_parser("enumerate", help="stream all labeled topologies at a size")
    p_en.add_argument("n", type=int)
    add_common(p_en)
    p_en.set_defaults(func=cmd_enumerate)

    p_or = sub.add_parser("oracle", help="brute-force parity report at a size")
    p_or.add_argument("n", type=int)
    p_or.add_argument("--max-word-len", type=int, default=3)
    add_common(p_or)
    p_or.set_defaults(func=cmd_oracle)

    p_cl = sub.add_parser("claims", help="list registered claims")
    add_common(p_cl)
    p_cl.set_defaults(func=cmd_claims)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotATopology as exc:
        print(f"not a topology: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return 2
    except (BudgetExceeded, UnknownName, UnknownClaim) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
