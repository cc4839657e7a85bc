"""Command-line front end: ``sasmall lattice|check|examples|verify|corpus``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from datetime import datetime, timezone

from .errors import (
    AlgebraError,
    BoundExceeded,
    InfiniteEnumeration,
    InfiniteLattice,
    ParseError,
    Undecidable,
)
from .modules import enumerate_submodules, format_module, parse_module, parse_submodule
from .predicates import (
    is_completely_irreducible,
    is_essential,
    is_sa_hollow,
    is_sa_small,
    is_small,
    is_T_sa_hollow,
    is_T_sa_small,
    refute_or_confirm_T_sa_small_with_witness,
)
from .rings import parse_ring
from .verifier import corpus as corpus_mod
from .verifier.examples import reproduce_paper_examples, summary_line
from .verifier.runner import SCHEMA, run_all, to_json_lines, to_table

EXIT_OK, EXIT_PARSE, EXIT_BOUND, EXIT_REGRESSION = 0, 2, 3, 4

PREDICATES = ("small", "essential", "sa-small", "t-sa-small", "sa-hollow", "t-sa-hollow",
              "completely-irreducible")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sasmall", description=__doc__)
    p.add_argument("--timestamp", action="store_true", help="prefix output with the UTC time")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmts=("text", "json")):
        sp.add_argument("--format", choices=fmts, default="text")
        sp.add_argument("--max-order", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("lattice", help="print the submodule lattice")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--module", required=True)
    common(sp, ("text", "json", "dot"))

    sp = sub.add_parser("check", help="evaluate one predicate")
    sp.add_argument("predicate", choices=PREDICATES)
    sp.add_argument("--ring", required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--sub", default=None)
    sp.add_argument("--T", dest="T", default=None)
    sp.add_argument("--witness", default=None, help="check a single X instead of quantifying")
    sp.add_argument("--strict-nonzero-X", action="store_true")
    common(sp)

    sp = sub.add_parser("examples", help="reproduce the worked examples")
    common(sp)

    sp = sub.add_parser("verify", help="run registry statements over the corpus")
    sp.add_argument("ids", nargs="+", help="statement ids or 'all'")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--strict-nonzero-X", action="store_true",
                    help="run the nonzero-X variant of each named statement")
    common(sp)

    sp = sub.add_parser("corpus", help="summarize the verification corpus")
    common(sp)
    return p


def _config(args) -> corpus_mod.CorpusConfig:
    cfg = corpus_mod.DEFAULT
    if args.max_order is not None:
        cfg = replace(cfg, max_module_order=args.max_order)
    if args.seed:
        cfg = replace(cfg, seed=args.seed)
    return cfg


def _cmd_lattice(args, out) -> int:
    M = parse_module(args.module, parse_ring(args.ring))
    lat = enumerate_submodules(M, args.max_order) if args.max_order else enumerate_submodules(M)
    if args.format == "dot":
        out.write(lat.to_dot().rstrip("\n") + "\n")
    elif args.format == "json":
        out.write(lat.to_json().rstrip("\n") + "\n")
    else:
        from .modules import format_submodule
        out.write(f"{format_module(M)} over {M.ring}: {len(lat.all)} submodules\n")
        for i, s in enumerate(lat.all):
            up = [j for a, j in lat.hasse if a == i]
            out.write(f"  [{i}] {format_submodule(s)}  covered by {up}\n")
    return EXIT_OK


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise ParseError(f"--{n} is required for {args.predicate}")


def _cmd_check(args, out) -> int:
    M = parse_module(args.module, parse_ring(args.ring))
    sub = lambda t: parse_submodule(t, M)  # noqa: E731
    pred, strict = args.predicate, args.strict_nonzero_X
    inputs = {"ring": str(M.ring), "module": format_module(M)}
    if pred in ("sa-hollow",):
        v = is_sa_hollow(M)
    elif pred == "t-sa-hollow":
        _need(args, "T")
        inputs["T"] = args.T
        v = is_T_sa_hollow(M, sub(args.T), strict=strict)
    else:
        _need(args, "sub")
        N = sub(args.sub)
        inputs["sub"] = args.sub
        if pred == "small":
            v = is_small(N)
        elif pred == "essential":
            v = is_essential(N)
        elif pred == "sa-small":
            v = is_sa_small(N)
        elif pred == "completely-irreducible":
            v = is_completely_irreducible(N)
        else:
            _need(args, "T")
            inputs["T"] = args.T
            T = sub(args.T)
            if args.witness is not None:
                inputs["witness"] = args.witness
                v = refute_or_confirm_T_sa_small_with_witness(N, T, sub(args.witness))
            else:
                v = is_T_sa_small(N, T, strict=strict)
    if strict:
        inputs["strict_nonzero_X"] = True
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA, **v.to_json(pred, inputs)}, sort_keys=True,
                             ensure_ascii=False) + "\n")
    else:
        wit = v.to_json(pred, inputs)["witness"]
        line = f"{pred}: {v.value}"
        if wit is not None:
            line += f" (witness X = {wit})"
        out.write(f"{line}; {v.reason}\n")
    return EXIT_OK


def _cmd_examples(args, out) -> int:
    blocks = reproduce_paper_examples()
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA, "blocks": [b.to_json() for b in blocks]},
                             sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for b in blocks:
            out.write(f"[{'ok' if b.passed else 'FAIL'}] {b.name}\n")
            for c, ok in b.checks:
                if not ok:
                    out.write(f"    failed: {c}\n")
        out.write(summary_line(blocks) + "\n")
    return EXIT_OK if all(b.passed for b in blocks) else EXIT_REGRESSION


def _cmd_verify(args, out) -> int:
    cfg = _config(args)
    reports = run_all(cfg, args.jobs, args.ids, strict=args.strict_nonzero_X)
    out.write(to_json_lines(reports) if args.format == "json" else to_table(reports))
    blocks = reproduce_paper_examples()
    if not all(b.passed for b in blocks):
        print(summary_line(blocks), file=sys.stderr)
        return EXIT_REGRESSION
    return EXIT_OK


def _cmd_corpus(args, out) -> int:
    s = corpus_mod.summary(_config(args))
    if args.format == "json":
        out.write(json.dumps(s, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for k in ("rings", "finite_modules", "z_windows", "homs", "monos", "epis",
                  "worked_instances"):
            out.write(f"{k}: {s[k]}\n")
    return EXIT_OK


COMMANDS = {"lattice": _cmd_lattice, "check": _cmd_check, "examples": _cmd_examples,
            "verify": _cmd_verify, "corpus": _cmd_corpus}


def parse_and_dispatch(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.timestamp:
        out.write(datetime.now(timezone.utc).isoformat() + "\n")
    try:
        return COMMANDS[args.command](args, out)
    except Undecidable as exc:
        err.write(f"undecidable: {exc} (try --witness X to check a single instance)\n")
        return EXIT_PARSE
    except (BoundExceeded, InfiniteLattice, InfiniteEnumeration) as exc:
        err.write(f"bound exceeded: {exc}\n")
        return EXIT_BOUND
    except (ParseError, AlgebraError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


def main(argv=None) -> int:
    return parse_and_dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
