"""Command-line interface.

Exit status: 0 on success, 1 on an invalid coloring or a flagged audit,
2 on usage, parse or eligibility errors. ``INJCOLOR_VERBOSITY=verbose``
adds per-step detail to reports.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from injcolor import __version__, kernels
from injcolor.conflict import build_conflict_graph, validate
from injcolor.discharging import audit_charges
from injcolor.exact import DEFAULT_BUDGET, chi_injective_exact
from injcolor.formats import ParseError, emit_coloring, emit_edge_list, graph_digest, parse_coloring, parse_edge_list
from injcolor.generators import gen_gadget, gen_random_eligible
from injcolor.graph import derive_core
from injcolor.mad import densest_subset, is_eligible
from injcolor.reduction import COLORS, Kind, NotEligible, ProofContractViolation, run_constructive

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def verbose() -> bool:
    return os.environ.get("INJCOLOR_VERBOSITY", "terse").lower() == "verbose"


def rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decimal(x: Fraction) -> str:
    return f"{float(x):.6f}"


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _graph_fields(g) -> dict:
    out = {"input_digest": graph_digest(g), "n": g.order, "m": g.size, "max_degree": g.max_degree}
    if g.max_degree > 4:
        out["degree_cap_exceeded"] = True
    return out


def _mad_fields(g) -> dict:
    if g.order == 0:
        return {"mad": "0/1", "mad_decimal": "0.000000"}
    value, witness = densest_subset(g)
    out = {"mad": rational(value), "mad_decimal": _decimal(value)}
    if verbose():
        out["mad_witness"] = sorted(v + 1 for v in witness)
    return out


def _charge_fields(g) -> dict:
    ch = audit_charges(derive_core(g), check_completeness=False)
    low = ch.charges.min_final
    return {"min_final_charge": rational(low) if low is not None else None, "deficiency_count": len(ch.deficient)}


def _levels(counts: dict) -> dict:
    # steps that delete only isolated vertices need no extension
    return {("none" if k is None else f"level{k}"): v for k, v in sorted(counts.items(), key=str)}


def _write(path, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# commands: each returns (report dict, exit status)


def cmd_mad(args):
    g = _load(args.file)
    return {**_graph_fields(g), **_mad_fields(g)}, EXIT_OK


def cmd_eligible(args):
    g = _load(args.file)
    elig = is_eligible(g)
    rep = {**_graph_fields(g), "mad": rational(elig.mad), "mad_decimal": _decimal(elig.mad)}
    rep["eligible"] = elig.eligible
    rep["reason"] = elig.explain()
    return rep, EXIT_OK


def cmd_exact(args):
    g = _load(args.file)
    res = chi_injective_exact(g, budget=args.budget)
    rep = {**_graph_fields(g), **_mad_fields(g), "chi": res.chi, "lower": res.lower, "upper": res.upper, "complete": res.complete}
    rep["nodes"] = res.nodes
    rep["validation"] = validate(build_conflict_graph(g), res.witness).summary()
    if args.output:
        _write(args.output, emit_coloring(res.witness))
    return rep, EXIT_OK


def cmd_color(args):
    g = _load(args.file)
    try:
        res = run_constructive(g)
    except NotEligible as exc:
        raise UsageError(f"{args.file}: not eligible ({exc})") from None
    report = validate(build_conflict_graph(g), res.coloring)
    rep = {**_graph_fields(g), **_mad_fields(g), "eligible": True}
    rep.update(constructive_colors=res.num_colors, valid=report.valid, validation=report.summary())
    rep.update(_charge_fields(g))
    rep["steps"] = len(res.steps)
    rep["extension_levels"] = _levels(res.level_counts())
    if verbose():
        rep["trace"] = [f"{st.config.describe()} level={st.level}" for st in res.steps]
    if args.output:
        _write(args.output, emit_coloring(res.coloring))
    return rep, EXIT_OK if report.valid and res.num_colors <= COLORS else EXIT_FAIL


def cmd_validate(args):
    g = _load(args.file)
    try:
        with open(args.coloring) as fh:
            col = parse_coloring(fh.read(), args.colors)
    except OSError as exc:
        raise UsageError(f"cannot read {args.coloring}: {exc.strerror}") from None
    except ParseError as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    report = validate(build_conflict_graph(g), col)
    rep = {**_graph_fields(g), "colors": col.num_colors, "k": col.k, "valid": report.valid}
    rep["validation"] = report.summary()
    if verbose() or not report.valid:
        rep["conflicts"] = [[[u + 1, v + 1], [x + 1, y + 1]] for (u, v), (x, y) in report.conflicts]
        rep["uncolored"] = [[u + 1, v + 1] for u, v in report.missing]
    return rep, EXIT_OK if report.valid else EXIT_FAIL


def cmd_audit(args):
    g = _load(args.file)
    if g.max_degree > 4:
        raise UsageError(f"{args.file}: audit needs max degree <= 4")
    core = derive_core(g)
    audit = audit_charges(core)
    ch = audit.charges
    rep = {**_graph_fields(g), "core_n": core.graph.order, "core_m": core.graph.size}
    rep["min_final_charge"] = rational(ch.min_final) if ch.min_final is not None else None
    rep["deficiency_count"] = len(audit.deficient)
    rep["unexplained"] = [v + 1 for v in audit.unexplained]
    rep["conserved"] = ch.conserved
    rep["completeness_violation"] = audit.completeness_violation
    if verbose():
        rep["explanations"] = {str(v + 1): cfg.describe() if cfg else None for v, cfg in sorted(audit.explanations.items())}
    return rep, EXIT_FAIL if audit.bug else EXIT_OK


def cmd_gen(args):
    if args.gadget:
        try:
            gad = gen_gadget(args.gadget, args.variant)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        comments = [f"gadget {gad.kind}"] + [f"role {r} {v + 1}" for r, v in gad.roles.items()]
        g = gad.graph
    else:
        n, seed = args.random
        if n < 1:
            raise UsageError("n must be at least 1")
        g = gen_random_eligible(n, seed)
        comments = [f"random eligible n={n} seed={seed}"]
    text = emit_edge_list(g, comments)
    if args.json:
        return {**_graph_fields(g), "document": text}, EXIT_OK
    _write(args.output or "-", text)
    return None, EXIT_OK


def batch_one(size: int, seed: int) -> dict:
    """Seven-color check for one seeded random eligible graph."""
    g = gen_random_eligible(size, seed)
    out = {"seed": seed, "m": g.size, "ok": False}
    try:
        res = run_constructive(g)
    except (NotEligible, ProofContractViolation) as exc:
        out["error"] = str(exc)
        return out
    valid = validate(build_conflict_graph(g), res.coloring).valid
    audit = audit_charges(derive_core(g), check_completeness=False)
    out.update(colors=res.num_colors, valid=valid, conserved=audit.charges.conserved)
    out["levels"] = _levels(res.level_counts())
    out["ok"] = valid and res.num_colors <= COLORS and audit.charges.conserved and not audit.bug
    return out


def cmd_batch(args):
    seeds = [args.seed + i for i in range(args.count)]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(batch_one, [args.size] * len(seeds), seeds))
    else:
        rows = [batch_one(args.size, s) for s in seeds]
    levels: dict = {}
    for r in rows:
        for k, v in r.get("levels", {}).items():
            levels[k] = levels.get(k, 0) + v
    failures = [r for r in rows if not r["ok"]]
    rep = {"count": len(rows), "size": args.size, "seed": args.seed, "failures": len(failures)}
    rep["max_colors"] = max((r.get("colors", 0) for r in rows), default=0)
    rep["extension_levels"] = dict(sorted(levels.items()))
    if failures:
        rep["failed_seeds"] = [r["seed"] for r in failures]
    if verbose():
        rep["rows"] = rows
    return rep, EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    p = argparse.ArgumentParser(prog="injcolor", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mad", parents=[common], help="exact maximum average degree")
    s.add_argument("file")
    s.set_defaults(func=cmd_mad)

    s = sub.add_parser("eligible", parents=[common], help="max degree <= 4 and mad < 8/3?")
    s.add_argument("file")
    s.set_defaults(func=cmd_eligible)

    s = sub.add_parser("exact", parents=[common], help="exact injective chromatic index")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    s.add_argument("--output", help="write the witness coloring here ('-' for stdout)")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("color", parents=[common], help="constructive 7-coloring of an eligible graph")
    s.add_argument("file")
    s.add_argument("--output", help="write the coloring here ('-' for stdout)")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("validate", parents=[common], help="check a coloring file")
    s.add_argument("file")
    s.add_argument("coloring")
    s.add_argument("--colors", type=int, help="palette size k (default: largest color used)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("audit", parents=[common], help="discharging audit of the core graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("gen", parents=[common], help="generate a graph file")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--random", nargs=2, type=int, metavar=("N", "SEED"))
    grp.add_argument("--gadget", choices=[k.value for k in Kind])
    s.add_argument("--variant", help="proof branch for FourWithTwoOneAndTwoSmall (2_0 or 3_2)")
    s.add_argument("--output", help="output path (default stdout)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("batch", parents=[common], help="check the 7-color bound on many random eligible graphs")
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_batch)
    return p


def _emit(rep: dict, as_json: bool, out) -> None:
    if as_json:
        json.dump(rep, out, indent=2, sort_keys=False)
        out.write("\n")
        return
    for key, value in rep.items():
        expand = isinstance(value, dict) or (isinstance(value, list) and value and isinstance(value[0], (str, dict)))
        if expand and value and verbose():
            out.write(f"{key}:\n")
            items = value.items() if isinstance(value, dict) else enumerate(value)
            for k, v in items:
                out.write(f"  {k}: {v}\n")
        else:
            out.write(f"{key}: {value}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rep, status = args.func(args)
    except UsageError as exc:
        print(f"injcolor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProofContractViolation as exc:
        print(f"injcolor: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if rep is not None:
        rep["elapsed_ms"] = round(1000 * (time.perf_counter() - start))
        _emit(rep, args.json, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
