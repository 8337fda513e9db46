"""Command-line front end: parse order ideals, dispatch computations, and
emit JSON or text reports."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bbscheme import BBScheme
from .lshape_data import lshape_ideal
from .orderideal import OrderIdeal, make_box, make_simplicial
from .polyring import BudgetExceeded, degrevlex, elimination_ideal
from .reembed import (
    DEFAULT_MULT_BOUND,
    DEFAULT_NODE_BUDGET,
    best_separating_tuples,
    conjecture_survey,
    eliminate_non_exposed,
    optimal_planar_reembed,
    simplicial_separating_tuple,
    verify_lshape_pipeline,
    weight_assignment,
    zsep_reembed,
)

SCHEMA = 1

EXIT_OK = 0
EXIT_MATH = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


class MathRejection(Exception):
    """Input is well-formed but mathematically invalid for the command."""


def parse_ideal(source):
    """Order ideal from shorthand, inline JSON, or a JSON file path."""
    source = source.strip()
    if source == "lshape":
        return lshape_ideal()
    parts = source.split()
    if len(parts) == 3 and parts[0] in ("box", "simplicial"):
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise MathRejection(f"bad shorthand {source!r}")
        return make_box(a, b) if parts[0] == "box" else make_simplicial(a, b)
    if source.startswith("{"):
        data = json.loads(source)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    if not isinstance(data, dict) or "n" not in data or "terms" not in data:
        raise MathRejection("ideal JSON needs keys 'n' and 'terms'")
    return OrderIdeal(int(data["n"]), [tuple(t) for t in data["terms"]])


def _poly_str(scheme, f):
    return f.render(scheme.vt, degrevlex(scheme.arity))


def _names(scheme, indices):
    return [scheme.cname(k) for k in sorted(indices)]


def cmd_border(scheme, args):
    o = scheme.o
    return {
        "mu": o.mu,
        "nu": o.nu,
        "terms": [list(t) for t in o.terms],
        "border": [list(b) for b in o.border()],
        "rim": [list(t) for t in o.rim()],
        "interior": [list(t) for t in o.interior()],
    }


def cmd_generators(scheme, args):
    nat = scheme.natural_generators()
    comm = scheme.commutator_generators()
    return {
        "natural": [
            {
                "label": "{}({},{})_{}".format(lab[0], lab[1], lab[2], lab[3]),
                "poly": _poly_str(scheme, g),
            }
            for lab, g in nat.items()
            if not g.is_zero()
        ],
        "commutator_nonzero": sum(
            1 for g in comm.values() if not g.is_zero()
        ),
    }


def cmd_grading(scheme, args):
    degs, W = scheme.arrow_grading()
    return {
        "W": [int(w) for w in W],
        "arrow_degrees": {
            scheme.cname(k): list(degs[k]) for k in range(scheme.arity)
        },
        "weight_zero": _names(
            scheme,
            [k for k in range(scheme.arity) if scheme.weight_degree(k) == 0],
        ),
    }


def cmd_exposure(scheme, args):
    exposed = scheme.exposure()
    return {
        "exposed": _names(scheme, exposed),
        "non_exposed": _names(
            scheme, set(range(scheme.arity)) - set(exposed)
        ),
    }


def cmd_cotangent(scheme, args):
    cot = scheme.cotangent()
    return {
        "dim": cot["dim"],
        "E0": _names(scheme, cot["E0"]),
        "classes": [_names(scheme, cls) for cls in cot["classes"]],
        "singletons": [_names(scheme, cls) for cls in cot["singletons"]],
        "basic": _names(scheme, cot["basic"]),
    }


def cmd_weights(scheme, args):
    if scheme.o.n != 2:
        raise MathRejection("weights requires a planar order ideal")
    wa = weight_assignment(scheme)
    return {
        "table": [[int(x) for x in row] for row in wa.table()],
        "flags": list(wa.flags),
    }


def cmd_eliminate(scheme, args):
    if scheme.o.n != 2:
        raise MathRejection("eliminate requires a planar order ideal")
    result, wa = eliminate_non_exposed(scheme)
    return {
        "eliminated": _names(scheme, result.witness.Z),
        "remaining": _names(scheme, result.kept),
        "generators": [_poly_str(scheme, g) for g in result.generators],
        "flags": list(wa.flags),
    }


def cmd_best(scheme, args):
    wits = best_separating_tuples(
        scheme, node_budget=args.search_budget
    )
    return {
        "count": len(wits),
        "size": len(wits[0].Z) if wits else 0,
        "tuples": [_names(scheme, w.Z) for w in wits],
    }


def cmd_optimal(scheme, args):
    if scheme.o.n != 2:
        raise MathRejection("optimal requires a planar order ideal")
    rep = optimal_planar_reembed(scheme)
    return {
        "target": rep["target"],
        "optimal": [_names(scheme, Z) for Z, _ in rep["optimal"]],
        "separating": [_names(scheme, w.Z) for w in rep["separating"]],
        "candidates_tried": rep["candidates_tried"],
    }


def cmd_simplicial(scheme, args):
    if not scheme.o.is_simplicial():
        raise MathRejection("simplicial requires a simplicial order ideal")
    wit = simplicial_separating_tuple(scheme)
    res = zsep_reembed(scheme, wit)
    return {
        "Z": _names(scheme, wit.Z),
        "remaining": _names(scheme, res.kept),
        "generators": [_poly_str(scheme, g) for g in res.generators],
    }


def cmd_lshape_verify(args):
    rep = verify_lshape_pipeline()
    return {
        "ok": rep["ok"],
        "checks": rep["checks"],
        "support_lengths": list(rep.get("support_lengths", ())),
    }


def cmd_survey(args):
    rows = conjecture_survey(mu_max=args.mu_max, workers=args.workers)
    return {
        "rows": [
            {
                "terms": [list(t) for t in r["terms"]],
                "mu": r["mu"],
                "segments": r["segments"],
                "optimal_found": r["optimal_found"],
                "consistent": r["consistent"],
            }
            for r in rows
        ],
        "consistent": all(r["consistent"] for r in rows),
    }


def cmd_gb_elim(scheme, args):
    if not args.vars:
        raise UsageError("gb-elim requires --vars")
    try:
        elim = [scheme.vt.index(n) for n in args.vars.split(",")]
    except KeyError as e:
        raise UsageError(f"unknown variable {e.args[0]!r}")
    gens = [
        g for g in scheme.natural_generators().values() if not g.is_zero()
    ]
    basis = elimination_ideal(
        gens, scheme.arity, elim, budget=args.gb_budget
    )
    return {
        "eliminated": _names(scheme, elim),
        "basis": [_poly_str(scheme, g) for g in basis],
    }


class UsageError(Exception):
    """Malformed invocation."""


COMMANDS = {
    "border": cmd_border,
    "generators": cmd_generators,
    "grading": cmd_grading,
    "exposure": cmd_exposure,
    "cotangent": cmd_cotangent,
    "weights": cmd_weights,
    "eliminate": cmd_eliminate,
    "best": cmd_best,
    "optimal": cmd_optimal,
    "simplicial": cmd_simplicial,
    "gb-elim": cmd_gb_elim,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="bbs",
        description="Border basis schemes: generators, gradings, and "
        "re-embedding searches.",
    )
    p.add_argument(
        "command",
        choices=sorted(COMMANDS) + ["lshape-verify", "survey"],
    )
    p.add_argument("--ideal", help="JSON, file path, or shorthand")
    p.add_argument("--vars", help="comma-separated variables (gb-elim)")
    p.add_argument("--out", choices=("json", "text"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--gb-budget", type=int, default=10_000_000)
    p.add_argument(
        "--search-budget", type=int, default=DEFAULT_NODE_BUDGET
    )
    p.add_argument("--mu-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return p


def _render_text(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return EXIT_USAGE
    start = time.time()
    report = {"schema": SCHEMA, "command": args.command}
    try:
        if args.command == "lshape-verify":
            if args.ideal:
                raise UsageError("lshape-verify takes no --ideal")
            payload = cmd_lshape_verify(args)
        elif args.command == "survey":
            if args.ideal:
                raise UsageError("survey takes no --ideal")
            payload = cmd_survey(args)
        else:
            if not args.ideal:
                raise UsageError(f"{args.command} requires --ideal")
            try:
                o = parse_ideal(args.ideal)
            except (ValueError, OSError, json.JSONDecodeError) as e:
                raise MathRejection(str(e))
            report["ideal"] = {
                "n": o.n,
                "terms": [list(t) for t in o.terms],
            }
            payload = COMMANDS[args.command](BBScheme(o), args)
    except UsageError as e:
        report.update(error="usage", reason=str(e))
        print(json.dumps(report), file=sys.stderr)
        return EXIT_USAGE
    except MathRejection as e:
        report.update(error="rejected", reason=str(e))
        print(json.dumps(report), file=sys.stderr)
        return EXIT_MATH
    except BudgetExceeded as e:
        report.update(error="budget", reason=str(e))
        print(json.dumps(report), file=sys.stderr)
        return EXIT_BUDGET
    report["result"] = payload
    report["seconds"] = round(time.time() - start, 3)
    if args.out == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
