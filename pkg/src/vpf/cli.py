"""Command-line interface: build the chamber database once, query instantly.

Commands: build, mult, character, chambers, selftest.
Exit codes: 0 success, 1 user error, 2 internal invariant violation.
"""

import argparse
import os
import sys
from fractions import Fraction

from . import db as dbmod
from . import so5
from .db import DatabaseError
from .quasipoly import NonRationalCoefficient
from .so5 import GluingMismatch, NegativeValue, NonIntegerValue


class UnknownChamberId(Exception):
    pass


class OracleMismatch(Exception):
    pass


SO5_VARS = ("l1", "l2", "b1", "b2")


def format_poly(poly, varnames):
    items = poly.canonical_items()
    if not items:
        return "0"
    parts = []
    for exps, coeff in items:
        factors = []
        for v, e in zip(varnames, exps):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("%s^%d" % (v, e))
        c = Fraction(coeff)
        mag = dbmod.fraction_str(abs(c))
        if factors:
            body = "*".join(factors)
            lead = body if mag == "1" else "%s*%s" % (mag, body)
        else:
            lead = mag
        parts.append(("-" if c < 0 else "+", lead))
    sign, lead = parts[0]
    text = ("-" if sign == "-" else "") + lead
    for sign, lead in parts[1:]:
        text += " %s %s" % (sign, lead)
    return text


def format_quasipoly(qp, varnames):
    polys = set(qp.cosets.values())
    if len(polys) == 1:
        return [format_poly(next(iter(polys)), varnames)]
    lines = []
    for key in sorted(qp.cosets):
        cond = ", ".join("%s=%d mod %d" % (v, k, p)
                         for v, k, p in zip(varnames, key, qp.periods) if p > 1)
        lines.append("[%s] %s" % (cond, format_poly(qp.cosets[key], varnames)))
    return lines


def parse_pair(text):
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError("expected a comma-separated integer pair, got %r" % text)
    if len(parts) != 2:
        raise ValueError("expected exactly two integers, got %r" % text)
    return tuple(parts)


def read_matrix(path):
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([int(x) for x in line.split()])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix file must hold equal-length integer rows")
    return rows


def workers_from_env():
    raw = os.environ.get("VPF_THREADS", "")
    if raw:
        workers = int(raw)
        if workers < 1:
            raise ValueError("VPF_THREADS must be a positive integer")
        return workers
    return os.cpu_count() or 1


def cmd_build(args):
    if args.matrix:
        a_rows = read_matrix(args.matrix)
        from .engine import build_generic_chambers
        chambers, counts = build_generic_chambers(a_rows)
        for key in ("basic_subsets", "nbc_subsets", "maximal_cones", "chambers"):
            print("%s: %d" % (key, counts[key]))
        dbmod.save_generic(args.out, a_rows, chambers, counts)
    else:
        table = build_chamber_table_verbose(workers_from_env())
        a_rows, b_rows = so5.build_matrices()
        dbmod.save_table(args.out, table, a_rows, b_rows)
    print("wrote %s" % args.out)
    return 0


def build_chamber_table_verbose(workers):
    table = so5.build_chamber_table(workers=workers, progress=print)
    return table


def cmd_mult(args):
    table, _, _ = dbmod.load_table(args.db)
    lam = parse_pair(args.lam)
    beta = parse_pair(args.beta)
    k = so5.multiplicity(lam, beta, table)
    idx = table.find_chamber(lam + beta)
    where = "chamber %d" % (idx + 1) if idx is not None else "outside all chambers"
    print("%d  (%s)" % (k, where))
    if args.verify:
        oracle = so5.brute_force_multiplicity(lam, beta)
        print("brute force: %d" % oracle)
        if oracle != k:
            raise OracleMismatch(
                "chamber evaluation %d != brute force %d at lambda=%s beta=%s"
                % (k, oracle, lam, beta))
    return 0


def cmd_character(args):
    table, _, _ = dbmod.load_table(args.db)
    lam = parse_pair(args.lam)
    char = so5.character(lam, table)
    total = 0
    if args.format == "csv":
        print("beta1,beta2,multiplicity")
    for (b1, b2), k in sorted(char.items()):
        total += k
        if args.format == "csv":
            print("%d,%d,%d" % (b1, b2, k))
        else:
            print("%d %d %d" % (b1, b2, k))
    print("total = %d" % total)
    expected = so5.weyl_dimension(lam)
    if total != expected:
        raise OracleMismatch("character sum %d != dimension formula %d"
                             % (total, expected))
    return 0


def cmd_chambers(args):
    table, _, _ = dbmod.load_table(args.db)
    if args.poly is not None:
        if not 1 <= args.poly <= table.n_chambers:
            raise UnknownChamberId("chamber id %d not in 1..%d"
                                   % (args.poly, table.n_chambers))
        _, qp = table.chambers[args.poly - 1]
        for line in format_quasipoly(qp, SO5_VARS):
            print(line)
        return 0
    if args.lam is not None:
        lam = parse_pair(args.lam)
        for idx, verts in so5.induced_decomposition(lam, table):
            coords = " ".join("(%s,%s)" % (dbmod.fraction_str(x), dbmod.fraction_str(y))
                              for x, y in verts)
            print("chamber %d: %s" % (idx + 1, coords))
        return 0
    for idx, (cone, qp) in enumerate(table.chambers):
        ineqs = ", ".join(
            format_poly_ineq(nv) for nv in cone.serialized_normals())
        print("chamber %d: {%s}" % (idx + 1, ineqs))
        for line in format_quasipoly(qp, SO5_VARS):
            print("  f_%d = %s" % (idx + 1, line))
    return 0


def format_poly_ineq(normal):
    from .polynomial import Poly
    p = Poly.linear_form(4, [Fraction(c) for c in normal])
    return "%s >= 0" % format_poly(p, SO5_VARS)


def cmd_selftest(args):
    table, _, _ = dbmod.load_table(args.db)
    bound = args.max_lambda
    checked = 0
    for l1 in range(bound + 1):
        for l2 in range(bound + 1):
            lam = (l1, l2)
            total = 0
            for b1 in range(0, 2 * l1 + 2 * l2 + 2):
                for b2 in range(0, l1 + 2 * l2 + 2):
                    k = so5.multiplicity(lam, (b1, b2), table)
                    oracle = so5.brute_force_multiplicity(lam, (b1, b2))
                    if k != oracle:
                        print("FAIL oracle: lambda=%s beta=%s chamber=%d oracle=%d"
                              % (lam, (b1, b2), k, oracle))
                        raise OracleMismatch("first counterexample printed above")
                    total += k
                    checked += 1
            expected = so5.weyl_dimension(lam)
            if total != expected:
                print("FAIL checksum: lambda=%s sum=%d dimension=%d"
                      % (lam, total, expected))
                raise OracleMismatch("first counterexample printed above")
    print("selftest pass: %d multiplicities verified up to lambda=(%d,%d)"
          % (checked, bound, bound))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vpf",
        description="Chamber complex and quasi-polynomials of vector "
                    "partition functions; so5 weight multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="run the full pipeline and write the database")
    p.add_argument("--out", required=True)
    p.add_argument("--matrix", help="integer matrix file: generic engine, raw chambers")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("mult", help="one weight multiplicity")
    p.add_argument("--db", required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="L1,L2")
    p.add_argument("--beta", required=True, metavar="B1,B2")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("character", help="full character of one module")
    p.add_argument("--db", required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="L1,L2")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("chambers", help="chamber H-reps, quasi-polynomials, slices")
    p.add_argument("--db", required=True)
    p.add_argument("--lambda", dest="lam", metavar="L1,L2")
    p.add_argument("--poly", type=int, metavar="ID")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("selftest", help="oracle-equivalence and checksum suites")
    p.add_argument("--db", required=True)
    p.add_argument("--max-lambda", type=int, default=8)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DatabaseError, UnknownChamberId, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (OracleMismatch, GluingMismatch, NonIntegerValue, NegativeValue,
            NonRationalCoefficient, AssertionError) as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
