"""Command-line front end: JSON (or table) reports over the library.

Exit codes: 0 success, 2 user error (with a diagnostic naming the failing
precondition), 3 budget exceeded (partial report).  All output is
deterministic for fixed inputs and configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cohom, embed, liecoh
from .bwb import reciprocity_check, resolve
from .config import BudgetError, Config, UserError, load_config
from .hwmodule import weyl_dimension
from .rootdata import Weight, build_root_system
from .weyl import WeylElement, enumerate_weyl, longest_element

SCHEMA = "cohomolib/1"


def _parse_weight(text: str, rank: int) -> Weight:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise UserError(f"malformed weight {text!r}: expected comma-separated integers") from exc
    if len(parts) != rank:
        raise UserError(f"weight {text!r} has {len(parts)} coordinates, expected {rank}")
    return Weight.of(*parts)


def _parse_descriptor(args, config: Config):
    if args.descriptor_file:
        with open(args.descriptor_file) as fh:
            data = json.load(fh)
    elif args.descriptor:
        try:
            data = json.loads(args.descriptor)
        except json.JSONDecodeError as exc:
            raise UserError(f"descriptor is not valid JSON: {exc}") from exc
    else:
        raise UserError("a descriptor is required (--descriptor or --descriptor-file)")
    return embed.descriptor_from_json(data, config)


def _emit(report: dict, config: Config) -> None:
    report = {"schema": SCHEMA, **report}
    if config.output_format == "table":
        for key, value in report.items():
            print(f"{key}\t{json.dumps(value, sort_keys=True)}")
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--weyl-bound", type=int, default=None)
    p.add_argument("--height-bound", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--output", choices=["json", "table"], default=None)
    p.add_argument("--seed", type=int, default=None,
                   help="accepted for interface stability; all computation is deterministic")
    p.add_argument("--config-file", default=None)


def _config_of(args) -> Config:
    base = load_config(args.config_file)
    return base.with_overrides(max_dim=args.max_dim, weyl_bound=args.weyl_bound,
                               height_bound=args.height_bound,
                               parallel_workers=args.workers,
                               output_format=args.output)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cohomolib",
                                  description="exact decision procedures for equivariant "
                                              "cohomological pullbacks between flag manifolds")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="root system queries")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("describe")
    d.add_argument("--type", required=True)
    _add_common(d)

    p = sub.add_parser("weyl", help="Weyl group queries")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("enumerate")
    d.add_argument("--type", required=True)
    d.add_argument("--max-length", type=int, default=None)
    _add_common(d)

    p = sub.add_parser("bwb", help="cohomology-degree resolver")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("resolve")
    d.add_argument("--type", required=True)
    d.add_argument("--weight", required=True)
    _add_common(d)
    d = ps.add_parser("reciprocity")
    d.add_argument("--type", required=True)
    d.add_argument("--weight", required=True)
    d.add_argument("--mu", required=True)
    d.add_argument("--q", type=int, required=True)
    _add_common(d)

    d = sub.add_parser("kostant", help="closed-form nilradical cohomology")
    d.add_argument("--type", required=True)
    d.add_argument("--mu", required=True)
    d.add_argument("--q", type=int, default=None)
    _add_common(d)

    d = sub.add_parser("ce-oracle", help="brute-force nilradical cohomology")
    d.add_argument("--type", required=True)
    d.add_argument("--mu", required=True)
    d.add_argument("--q", type=int, default=None)
    _add_common(d)

    p = sub.add_parser("diag", help="diagonal embeddings")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("check")
    d.add_argument("--type", required=True)
    d.add_argument("--l1", required=True)
    d.add_argument("--l2", required=True)
    _add_common(d)
    d = ps.add_parser("triples")
    d.add_argument("--type", required=True)
    _add_common(d)

    p = sub.add_parser("embed", help="embedding descriptors")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("validate")
    d.add_argument("--descriptor", default=None)
    d.add_argument("--descriptor-file", default=None)
    _add_common(d)

    d = sub.add_parser("decide", help="general decision pipeline")
    d.add_argument("--descriptor", default=None)
    d.add_argument("--descriptor-file", default=None)
    d.add_argument("--weight", required=True)
    _add_common(d)

    p = sub.add_parser("principal", help="principal rational curves")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("classify")
    d.add_argument("--type", required=True)
    d.add_argument("--weight", required=True)
    _add_common(d)
    d = ps.add_parser("values")
    d.add_argument("--type", required=True)
    _add_common(d)

    p = sub.add_parser("compose", help="composed embeddings")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("decide")
    d.add_argument("--descriptor", default=None)
    d.add_argument("--descriptor-file", default=None)
    d.add_argument("--weight", required=True)
    _add_common(d)

    p = sub.add_parser("monoid", help="dominant-pair monoids")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("probe")
    d.add_argument("--descriptor", default=None)
    d.add_argument("--descriptor-file", default=None)
    d.add_argument("--w-word", required=True,
                   help="comma-separated 1-based reflection indices for the small element")
    d.add_argument("--wt-word", required=True,
                   help="comma-separated 1-based reflection indices for the big element")
    _add_common(d)

    p = sub.add_parser("adjoint", help="adjoint representation into sl(g)")
    ps = p.add_subparsers(dest="verb", required=True)
    d = ps.add_parser("degrees")
    d.add_argument("--type", required=True)
    d.add_argument("--kmax", type=int, required=True)
    _add_common(d)
    d = ps.add_parser("pullback")
    d.add_argument("--type", required=True)
    d.add_argument("--h1", required=True,
                   help="comma-separated rational simple-coroot coordinates")
    d.add_argument("--k", type=int, required=True)
    _add_common(d)

    return top


def _parse_word(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(p) - 1 for p in text.split(",")]
    except ValueError as exc:
        raise UserError(f"malformed word {text!r}") from exc


def _run(args, config: Config) -> dict:
    cmd = args.command
    verb = getattr(args, "verb", None)

    if cmd == "rootsys":
        system = build_root_system(args.type)
        return {"type": str(system.cartan_type), "rank": system.rank,
                "cartan": system.cartan,
                "positive_roots": [list(r) for r in system.positive_roots],
                "rho": system.rho.to_json(),
                "form": [[str(x) for x in row] for row in system.form]}

    if cmd == "weyl":
        system = build_root_system(args.type)
        groups = enumerate_weyl(system, config, max_length=args.max_length)
        return {"type": str(system.cartan_type),
                "sizes_by_length": [len(g) for g in groups],
                "elements": [[w.word_1based() for w in g] for g in groups]}

    if cmd == "bwb" and verb == "resolve":
        system = build_root_system(args.type)
        lam = _parse_weight(args.weight, system.rank)
        return {"type": str(system.cartan_type), "lambda": lam.to_json(),
                **resolve(system, lam).to_json()}

    if cmd == "bwb" and verb == "reciprocity":
        system = build_root_system(args.type)
        lam = _parse_weight(args.weight, system.rank)
        mu = _parse_weight(args.mu, system.rank)
        lhs, rhs = reciprocity_check(system, lam, mu, args.q, config)
        return {"lhs_dim": lhs, "rhs_dim": rhs, "equal": lhs == rhs}

    if cmd in ("kostant", "ce-oracle"):
        system = build_root_system(args.type)
        mu = _parse_weight(args.mu, system.rank)
        fn = liecoh.kostant_cohomology if cmd == "kostant" \
            else liecoh.chevalley_eilenberg_cohomology
        degrees = [args.q] if args.q is not None else range(len(system.positive_roots) + 1)
        return {"type": str(system.cartan_type), "mu": mu.to_json(),
                "slices": [fn(system, mu, q, config).to_json() for q in degrees]}

    if cmd == "diag" and verb == "check":
        system = build_root_system(args.type)
        l1 = _parse_weight(args.l1, system.rank)
        l2 = _parse_weight(args.l2, system.rank)
        return cohom.diagonal_decide(system, l1, l2, config).to_json()

    if cmd == "diag" and verb == "triples":
        system = build_root_system(args.type)
        triples = cohom.enumerate_disjoint_triples(system, config)
        return {"type": str(system.cartan_type), "count": len(triples),
                "triples": [{"w1": a.word_1based(), "w2": b.word_1based(),
                             "w": c.word_1based()} for a, b, c in triples]}

    if cmd == "embed":
        desc = _parse_descriptor(args, config)
        return {"valid": True, "variant": desc.variant,
                "small": str(desc.small.cartan_type), "big": str(desc.big.cartan_type),
                "iota_star": [[str(x) for x in row] for row in desc.iota_star]}

    if cmd == "decide":
        desc = _parse_descriptor(args, config)
        lam = _parse_weight(args.weight, desc.big.rank)
        return cohom.decide_pullback(desc, lam, config).to_json()

    if cmd == "principal" and verb == "classify":
        system = build_root_system(args.type)
        lam = _parse_weight(args.weight, system.rank)
        return cohom.principal_classify(system, lam, config).to_json()

    if cmd == "principal" and verb == "values":
        system = build_root_system(args.type)
        values = embed.principal_fundamental_values(system)
        return {"type": str(system.cartan_type),
                "values": [str(v) for v in values],
                "classes": [embed.principal_value_class(system, j)
                            for j in range(system.rank)]}

    if cmd == "compose":
        desc = _parse_descriptor(args, config)
        if desc.variant != "composed":
            raise UserError("compose decide expects a composed descriptor")
        lam = _parse_weight(args.weight, desc.big.rank)
        return cohom.composed_decide(desc, lam, config).to_json()

    if cmd == "monoid":
        desc = _parse_descriptor(args, config)
        w = WeylElement.from_word(desc.small, _parse_word(args.w_word))
        wt = WeylElement.from_word(desc.big, _parse_word(args.wt_word))
        sample = cohom.C_monoid_probe(desc, w, wt, config.height_bound, config)
        return sample.to_json()

    if cmd == "adjoint" and verb == "degrees":
        system = build_root_system(args.type)
        return {"type": str(system.cartan_type), "kmax": args.kmax,
                "degrees": cohom.invariant_degrees(system, args.kmax, config)}

    if cmd == "adjoint" and verb == "pullback":
        system = build_root_system(args.type)
        try:
            h1 = tuple(Fraction(p) for p in args.h1.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise UserError(f"malformed h1 {args.h1!r}") from exc
        if len(h1) != system.rank:
            raise UserError("h1 has the wrong rank")
        return cohom.adjoint_pullback(system, h1, args.k, config).to_json()

    raise UserError(f"unknown subcommand {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_of(args)
        report = _run(args, config)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        _emit({"budget_exceeded": str(exc)}, Config())
        return 3
    _emit(report, config)
    return 0


if __name__ == "__main__":
    sys.exit(main())
