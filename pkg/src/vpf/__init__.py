"""Exact chamber complexes and quasi-polynomials of vector partition
functions, with a frontend computing all weight multiplicities of so5(C)."""

from .combinatorics import build_fan, enumerate_basic_subsets, enumerate_nbc
from .engine import build_generic_chambers, partition_function
from .quasipoly import QuasiPolynomial
from .so5 import (ChamberTable, brute_force_multiplicity, build_chamber_table,
                  build_matrices, character, multiplicity, weyl_dimension)

__all__ = [
    "ChamberTable",
    "QuasiPolynomial",
    "brute_force_multiplicity",
    "build_chamber_table",
    "build_fan",
    "build_generic_chambers",
    "build_matrices",
    "character",
    "enumerate_basic_subsets",
    "enumerate_nbc",
    "multiplicity",
    "partition_function",
    "weyl_dimension",
]
