"""Batch command-line front end.

Every command emits a deterministic report (JSON by default, plain text
with --output text); the seed is always echoed.  Reports carrying more
than one computation route include an ``agreement`` field, and any
disagreement turns into exit status 2.

Exit codes: 0 ok, 2 cross-route disagreement, 3 resource cap hit,
4 parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .arith import PolyParseError, parse_poly
from .chern import (
    CompleteIntersection,
    character_table,
    ci_hilbert_series_oracle,
    euler_top,
    hilbert_poly_characters,
    hilbert_poly_hrr,
)
from .grobner import (
    INFINITE,
    ResourceCapExceeded,
    count_zero_dim,
    hilbert_data,
    in_ideal,
    parse_ideal_file,
    ideal_file_text,
)
from .partitions import parse_partition
from .reductions import (
    count_sat_bruteforce,
    him_decide,
    parse_dimacs,
    sat_to_ideal,
)
from .symfun import delta_table, todd_poly
from .transversality import InputInstance, random_flag, transversality_report

SCHEMA = 1

EXIT_OK = 0
EXIT_DISAGREE = 2
EXIT_RESOURCE = 3
EXIT_PARSE = 4


@dataclass
class Config:
    seed: int = 0
    max_basis: int = 5000
    max_degree: int = 120
    output: str = "json"

    def caps(self):
        return {"max_basis": self.max_basis, "max_degree": self.max_degree}


class CliParseError(ValueError):
    pass


def _q(x):
    """Rationals as 'p/q' strings; integers stay machine integers."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)
    return x


def _poly_report(p):
    return {
        "text": p.to_text(),
        "coefficients": [_q(p.coefficient(k)) for k in range(max(p.degree, 0) + 1)],
        "degree": p.degree,
    }


def _parse_kv(tokens, spec, required=()):
    """Parse positional key=value tokens against {key: converter}."""
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise CliParseError("expected key=value, got %r" % tok)
        key, _, value = tok.partition("=")
        if key not in spec:
            raise CliParseError("unknown key %r" % key)
        out[key] = spec[key](value)
    for key in required:
        if key not in out:
            raise CliParseError("missing required key %r" % key)
    return out


def _degrees(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(d) for d in text.split(","))


def _emit(report, config):
    report = {"schema": SCHEMA, "seed": config.seed, **report}
    if config.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for key in sorted(report):
            print("%s: %s" % (key, json.dumps(report[key], sort_keys=True)))
    return report


def cmd_hilbert(args, config):
    ideal = parse_ideal_file(open(args.ideal).read())
    if not ideal.homogeneous:
        raise CliParseError("ideal file contains inhomogeneous polynomials")
    data = hilbert_data(ideal, **config.caps())
    p = data.hilbert_polynomial
    m = p.degree
    report = {
        "hilbert_polynomial": _poly_report(p),
        "index_of_regularity": data.index_of_regularity,
        "projective_dimension": m,
    }
    if m >= 0:
        report["geometric_degree"] = _q(math.factorial(m) * p.coefficient(m))
        report["arithmetic_genus"] = _q((-1) ** m * (p.coefficient(0) - 1))
    _emit(report, config)
    return EXIT_OK


def _character_map(ci):
    return {str(mu): value for mu, value in sorted(
        character_table(ci).items(), key=lambda kv: (kv[0].size, kv[0].parts))}


def cmd_ci(args, config):
    kv = _parse_kv(args.params, {"n": int, "degrees": _degrees}, required=("n",))
    ci = CompleteIntersection(kv["n"], kv.get("degrees", ()))
    hrr = hilbert_poly_hrr(ci)
    chars = hilbert_poly_characters(ci)
    oracle = ci_hilbert_series_oracle(ci)
    agree = hrr == chars == oracle
    report = {
        "n": ci.n,
        "degrees": list(ci.degrees),
        "dimension": ci.m,
        "hilbert_hrr": _poly_report(hrr),
        "hilbert_characters": _poly_report(chars),
        "hilbert_series": _poly_report(oracle),
        "characters": _character_map(ci),
        "euler_top": euler_top(ci),
        "agreement": agree,
    }
    _emit(report, config)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_characters(args, config):
    kv = _parse_kv(args.params, {"n": int, "degrees": _degrees}, required=("n",))
    ci = CompleteIntersection(kv["n"], kv.get("degrees", ()))
    _emit({"n": ci.n, "degrees": list(ci.degrees),
           "characters": _character_map(ci)}, config)
    return EXIT_OK


def cmd_delta(args, config):
    kv = _parse_kv(args.params, {"m": int, "k": int, "n": int},
                   required=("m", "k", "n"))
    table = delta_table(kv["m"], kv["k"], kv["n"])
    entries = [{"mu": list(mu.parts), "value": _q(value)}
               for mu, value in sorted(table.entries.items(),
                                       key=lambda kv2: (kv2[0].size, kv2[0].parts))]
    _emit({"m": table.m, "k": table.k, "n": table.n, "entries": entries}, config)
    return EXIT_OK


def cmd_todd(args, config):
    _emit({"m": args.m, "todd": todd_poly(args.m).to_text()}, config)
    return EXIT_OK


def cmd_reduce_sat(args, config):
    phi = parse_dimacs(open(args.cnf).read())
    ideal = sat_to_ideal(phi)
    brute = count_sat_bruteforce(phi)
    data = hilbert_data(ideal, **config.caps())
    constant = data.hilbert_polynomial.coefficient(0)
    hilbert_count = int(constant) if constant.denominator == 1 else None
    affine = [g.set_variable("x0", 1) for g in ideal.generators]
    zero_dim = count_zero_dim(affine, **config.caps())
    agree = (data.hilbert_polynomial.degree <= 0
             and hilbert_count == brute and zero_dim == brute)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(ideal_file_text(ideal))
    report = {
        "num_vars": phi.num_vars,
        "num_clauses": len(phi.clauses),
        "count_bruteforce": brute,
        "hilbert_constant": hilbert_count,
        "zero_dim_count": zero_dim if zero_dim != INFINITE else "INFINITE",
        "agree": agree,
        "ideal_file": args.out,
    }
    _emit(report, config)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_membership(args, config):
    ideal = parse_ideal_file(open(args.ideal).read())
    g = parse_poly(args.poly, ideal.variables)
    direct = in_ideal(g, ideal, **config.caps())
    via_hilbert = him_decide(ideal, g, **config.caps())
    agree = direct == via_hilbert
    _emit({"poly": g.to_text(), "in_ideal": direct,
           "him_decide": via_hilbert, "agreement": agree}, config)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_count(args, config):
    ideal = parse_ideal_file(open(args.ideal).read())
    count = count_zero_dim(list(ideal.generators), **config.caps())
    _emit({"count": count if count != INFINITE else "INFINITE"}, config)
    return EXIT_OK


def cmd_trans(args, config):
    ideal = parse_ideal_file(open(args.instance).read())
    n = len(ideal.variables) - 1
    x = tuple(Fraction(tok) for tok in args.point.split(","))
    if len(x) != n + 1:
        raise CliParseError("point has %d coordinates, expected %d" % (len(x), n + 1))
    mu = parse_partition(args.partition)
    if args.m is not None:
        m = args.m
    else:
        from . import linalg
        probe = InputInstance(polys=ideal.generators, n=n, m=n)
        from .transversality import jacobian_at, normalize_point
        m = n - linalg.rank(jacobian_at(probe, normalize_point(x)))
    inst = InputInstance(polys=ideal.generators, n=n, m=m)
    flag = random_flag(n, config.seed)
    report = transversality_report(inst, x, flag, mu)
    out = {
        "n": n, "m": m, "mu": str(mu),
        "point": [_q(v) for v in report["point"]],
        "smooth": report["smooth"],
        "on_cell": report["on_cell"],
        "chart": None if report["chart"] is None else
            [[_q(v) for v in row] for row in report["chart"]],
        "span_dim": report["span_dim"],
        "needed": report["needed"],
        "transversal": report["transversal"],
    }
    _emit(out, config)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbertpoly",
        allow_abbrev=False,
        description="Hilbert polynomials by cross-validated routes, "
                    "Schubert transversality tests, and #SAT reductions.")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-basis", type=int, default=5000)
    parser.add_argument("--max-degree", type=int, default=120)
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert data of an ideal file")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("ci", help="three-route report for a complete intersection")
    p.add_argument("params", nargs="+", metavar="key=value")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("characters", help="projective character table")
    p.add_argument("params", nargs="+", metavar="key=value")
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("delta", help="delta coefficient table")
    p.add_argument("params", nargs="+", metavar="key=value")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("todd", help="Todd polynomial in c1..cm")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_todd)

    p = sub.add_parser("reduce-sat", help="CNF to ideal with verification report")
    p.add_argument("cnf")
    p.add_argument("--out", default=None, help="write the ideal file here")
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("membership", help="dual-oracle ideal membership")
    p.add_argument("ideal")
    p.add_argument("poly")
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("count", help="number of affine zeros (or INFINITE)")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("trans", help="transversality verdict at a point")
    p.add_argument("instance")
    p.add_argument("point", help="comma-separated rational coordinates")
    p.add_argument("partition", help="partition like [1]")
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_trans)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = Config(seed=args.seed, max_basis=args.max_basis,
                    max_degree=args.max_degree, output=args.output)
    try:
        return args.func(args, config)
    except ResourceCapExceeded as exc:
        print(json.dumps({"schema": SCHEMA, "error": "resource-cap",
                          "detail": str(exc)}), file=sys.stderr)
        return EXIT_RESOURCE
    except (CliParseError, PolyParseError, ValueError, OSError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": "parse",
                          "detail": str(exc)}), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
