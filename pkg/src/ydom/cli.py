"""Command-line surface: parsing, dispatch, and machine-readable output.

Every subcommand prints one JSON object (see schema.json, shipped with
the package) or a plain-text table with --format text.  Exit codes:
0 success, 2 usage error, 3 a search budget or size limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import approx, construct, exact, oracle, turan
from .diagram import YoungDiagram, format_zero_set, parse_zero_set
from .dynamics import INF, Grid, evolve, latency_of
from .errors import BudgetExceededError, LimitExceededError

SCHEMA_VERSION = 1


def _parse_latency(text: str):
    if text.strip().lower() in ("inf", "infinity"):
        return INF
    value = int(text)
    if value < 0:
        raise ValueError("latency must be nonnegative")
    return value


def _latency_json(latency):
    return "inf" if latency == INF else int(latency)


def _emit(out: dict, args) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **out}
    if args.format == "text":
        text = "\n".join(_text_lines(payload))
    else:
        text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _text_lines(payload, prefix=""):
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, dict):
            yield "%s%s:" % (prefix, key)
            yield from _text_lines(val, prefix + "  ")
        else:
            yield "%s%s: %s" % (prefix, key, json.dumps(val))


def _zero_set(args) -> YoungDiagram:
    return parse_zero_set(args.zero_set, m=args.m, n=args.n)


# -- subcommands --------------------------------------------------------------


def _cmd_exact(args) -> dict:
    zero = _zero_set(args)
    hit = exact.dispatch_exact(zero, args.m, args.n, args.latency)
    if hit is None:
        return {
            "command": "exact",
            "value": None,
            "method": "formula-unavailable",
            "latency": _latency_json(args.latency),
        }
    out = {"command": "exact", "method": "closed-form", "latency": _latency_json(args.latency)}
    out.update(hit)
    return out


def _cmd_simulate(args) -> dict:
    zero = _zero_set(args)
    if args.infile == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.infile) as fh:
            data = json.load(fh)
    g = Grid.from_json_dict(data)
    if (g.m, g.n) != (args.m, args.n):
        raise ValueError("grid file is %dx%d but --m/--n say %dx%d" % (g.m, g.n, args.m, args.n))
    evolved = evolve(g, zero, latency=args.latency)
    return {
        "command": "simulate",
        "grid": evolved.to_json_dict(),
        "latency_of": latency_of(g, zero),
        "full": evolved.is_full(),
        "latency": _latency_json(args.latency),
    }


def _cmd_construct(args) -> dict:
    fam = args.family
    if fam == "vshape":
        _need(args, "a", "b", "m", "n")
        g = construct.dominating_vshape(args.a, args.b, args.m, args.n)
        formula = exact.gamma_vshape(args.a, args.b, args.m, args.n)
        stated = 1
    elif fam == "rect":
        _need(args, "a", "b", "m", "n")
        g = construct.dominating_rect(args.a, args.b, args.m, args.n)
        formula = exact.gamma_rect_fast(args.a, args.b, args.m, args.n)
        stated = 1
    elif fam == "boot":
        _need(args, "a", "n")
        g = construct.dominating_boot(args.a, args.n)
        formula = exact.gamma_boot(args.a, args.n)
        stated = 1
    else:  # gamma2
        _need(args, "m", "n")
        if not args.zero_set:
            raise ValueError("--family gamma2 needs --zero-set")
        zero = _zero_set(args)
        g = construct.dominating_gamma2(zero, args.m, args.n)
        formula = exact.gamma2_formula(zero, args.m, args.n)
        stated = 2
    return {
        "command": "construct",
        "grid": g.to_json_dict(),
        "size": g.count,
        "latency": stated,
        "formula": formula,
    }


def _need(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError("--family %s needs --%s" % (args.family, ", --".join(missing)))


def _cmd_approx(args) -> dict:
    zero = _zero_set(args)
    if args.alg == "dp3":
        value, witness = approx.approx3_gamma1(zero, args.m, args.n)
        return {
            "command": "approx",
            "value": value,
            "witness": witness.to_json_dict(),
            "guarantee": "[gamma,3gamma]",
        }
    latency = args.latency
    if latency == INF or latency < 2:
        raise ValueError("--alg bar needs a finite --latency of at least 2")
    res = approx.approxC_gammaL(zero, args.m, args.n, int(latency))
    return {
        "command": "approx",
        "value": res.upper_bound,
        "bar_value": res.bar_value,
        "witness": {
            "r": list(res.enhancements.r),
            "c": list(res.enhancements.c),
            "initial_set": res.initial_set.to_json_dict(),
        },
        "guarantee": "upper-bound",
    }


def _cmd_oracle(args) -> dict:
    zero = _zero_set(args)
    started = time.perf_counter()
    method = args.method
    if method == "auto":
        method = "profile" if (args.latency == 1 and args.m * args.n > 20) else "subsets"
    if method == "profile":
        if args.latency != 1:
            raise ValueError("--method profile only handles latency 1")
        res = oracle.exact_gamma1_profile(zero, args.m, args.n, with_witness=True)
        value, witness, nodes = res.value, res.witness, res.nodes
    else:
        res = oracle.exact_gammaL_bruteforce(
            zero, args.m, args.n, args.latency, max_cells=args.max_cells, jobs=args.jobs
        )
        value, witness, nodes = res.value, res.witness, res.nodes
    return {
        "command": "oracle",
        "value": value,
        "witness": witness.to_json_dict(),
        "nodes_searched": nodes,
        "elapsed_s": round(time.perf_counter() - started, 6),
        "method": method,
        "latency": _latency_json(args.latency),
    }


def _cmd_dual(args) -> dict:
    zero = _zero_set(args)
    d = zero.dual(args.m, args.n)
    return {
        "command": "dual",
        "dual": format_zero_set(d),
        "self_inverse": d.dual(args.m, args.n) == zero,
    }


def _cmd_turan(args) -> dict:
    pairs = []
    body = args.stars.strip()
    if body:
        for chunk in body.split(";"):
            p, q = (int(t) for t in chunk.split(","))
            pairs.append((p, q))
    fam = turan.minimalize(pairs)
    res = turan.ex_via_duality(args.m, args.n, fam)
    return {"command": "turan", **res.to_json_dict()}


# -- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ydom",
        description="Domination numbers with latency for neighborhood growth on Hamming rectangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, zero_set=True, latency="1"):
        if zero_set:
            p.add_argument("--zero-set", required=True, help="T:a | R:a,b | V:a,b | H:... | C:...")
        p.add_argument("--m", type=int, required=True, help="number of rows")
        p.add_argument("--n", type=int, required=True, help="number of columns")
        if latency is not None:
            p.add_argument("--latency", type=_parse_latency, default=_parse_latency(latency))
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--out", help="write the result to this file instead of stdout")

    p = sub.add_parser("exact", help="closed-form value when one applies")
    common(p)
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("simulate", help="evolve a grid from a JSON file")
    common(p, latency="inf")
    p.add_argument("--in", dest="infile", required=True, help="grid JSON file, or - for stdin")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("construct", help="explicit dominating set for a solved family")
    p.add_argument("--family", choices=["vshape", "rect", "boot", "gamma2"], required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--zero-set")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("approx", help="approximation algorithms")
    p.add_argument("--alg", choices=["dp3", "bar"], required=True)
    common(p, latency="2")
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("oracle", help="exhaustive ground truth on small grids")
    common(p)
    p.add_argument("--method", choices=["auto", "subsets", "profile"], default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-cells", type=int, default=oracle.DEFAULT_MAX_CELLS)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("dual", help="dual diagram inside the grid box")
    common(p, latency=None)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("turan", help="extremal edge count for a double-star family")
    p.add_argument("--stars", required=True, help='semicolon-separated "p,q" pairs; empty for none')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_turan)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        out = args.fn(args)
    except (BudgetExceededError, LimitExceededError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    _emit(out, args)
    return 0


def main(argv=None) -> int:
    code = run(argv)
    if code:
        sys.exit(code)
    return 0
