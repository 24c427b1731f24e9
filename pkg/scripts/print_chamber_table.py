#!/usr/bin/env python3
"""Print the full chamber table: H-representation and quasi-polynomial of
each of the 33 chambers, freshly computed (no database required)."""

from vpf import so5
from vpf.cli import SO5_VARS, format_poly_ineq, format_quasipoly


def main():
    table = so5.build_chamber_table(progress=print)
    for idx, (cone, qp) in enumerate(table.chambers, 1):
        print()
        print("chamber %d" % idx)
        for nv in cone.serialized_normals():
            print("  %s" % format_poly_ineq(nv))
        for line in format_quasipoly(qp.minimized(), SO5_VARS):
            print("  f = %s" % line)


if __name__ == "__main__":
    main()
