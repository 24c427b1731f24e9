"""Generic pipeline: chambers and quasi-polynomials of the partition
function of an arbitrary integer matrix (no parameter subspace, no gluing).
"""

from .combinatorics import (build_fan, enumerate_basic_subsets, enumerate_nbc,
                            gamma_order_lcm, torus_points)
from .exactlinalg import CyclotomicContext
from .residue import chamber_exponential_poly


def build_generic_chambers(a_rows):
    """All maximal chambers of the partition function of A, each with its
    quasi-polynomial on the lattice points of the chamber."""
    subsets = enumerate_basic_subsets(a_rows)
    gamma = torus_points(a_rows, subsets)
    nbc = enumerate_nbc(a_rows)
    fan = build_fan(a_rows, subsets)
    ctx = CyclotomicContext(gamma_order_lcm(gamma))
    cache = {}
    chambers = []
    for cone in fan.cones:
        expoly = chamber_exponential_poly(a_rows, cone, nbc, gamma, ctx, cache)
        chambers.append((cone, expoly.to_quasipolynomial()))
    counts = {
        "basic_subsets": len(subsets),
        "nbc_subsets": len(nbc),
        "maximal_cones": len(fan.cones),
        "chambers": len(chambers),
    }
    return chambers, counts


def partition_function(a_rows, chambers, h):
    """Evaluate the partition function at h from a chamber table (0 outside
    the support)."""
    for cone, qp in chambers:
        if cone.contains(h):
            value = qp.evaluate(h)
            assert value.denominator == 1 and value >= 0
            return int(value)
    return 0
