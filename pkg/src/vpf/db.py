"""Chamber-database persistence.

Structured JSON text with every numeric leaf rendered as a decimal string
("p/q" for rationals), fixed field order, and canonical chamber order, so
identical builds produce byte-identical files.
"""

import json
from fractions import Fraction

from .cones import Cone
from .polynomial import Poly
from .quasipoly import QuasiPolynomial

FORMAT_VERSION = 1


class DatabaseError(Exception):
    pass


def fraction_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_fraction(s):
    return Fraction(s)


def quasipoly_to_obj(qp):
    cosets = []
    for key in sorted(qp.cosets):
        poly = qp.cosets[key]
        terms = [[[str(e) for e in exps], fraction_str(c)]
                 for exps, c in poly.canonical_items()]
        cosets.append({"residue": [str(k) for k in key], "terms": terms})
    return {
        "dimension": str(qp.n),
        "periods": [str(p) for p in qp.periods],
        "cosets": cosets,
    }


def quasipoly_from_obj(obj):
    n = int(obj["dimension"])
    periods = tuple(int(p) for p in obj["periods"])
    cosets = {}
    for entry in obj["cosets"]:
        key = tuple(int(k) for k in entry["residue"])
        terms = {tuple(int(e) for e in exps): parse_fraction(c)
                 for exps, c in entry["terms"]}
        cosets[key] = Poly(n, terms)
    if len(cosets) != _expected_cosets(periods):
        raise DatabaseError("coset table size does not match periods")
    return QuasiPolynomial(n, periods, cosets)


def _expected_cosets(periods):
    total = 1
    for p in periods:
        total *= p
    return total


def chamber_to_obj(cone, qp):
    return {
        "normals": [[str(x) for x in nv] for nv in cone.serialized_normals()],
        "quasipolynomial": quasipoly_to_obj(qp),
    }


def chamber_from_obj(obj, dim):
    normals = [tuple(int(x) for x in nv) for nv in obj["normals"]]
    cone = Cone.from_inequalities(normals, dim)
    qp = quasipoly_from_obj(obj["quasipolynomial"])
    if qp.n != dim:
        raise DatabaseError("chamber and quasi-polynomial dimension mismatch")
    return cone, qp


def save_table(path, table, a_rows, b_rows):
    from .so5 import ChamberTable
    obj = {
        "format_version": str(FORMAT_VERSION),
        "kind": "so5",
        "matrix_a": [[str(x) for x in row] for row in a_rows],
        "matrix_b": [[str(x) for x in row] for row in b_rows],
        "counts": {
            "basic_subsets": str(table.n_basic_subsets),
            "nbc_subsets": str(table.n_nbc),
            "maximal_cones": str(table.n_maximal_cones),
            "intersections": str(table.n_intersections),
            "chambers": str(table.n_chambers),
        },
        "chambers": [chamber_to_obj(c, q) for c, q in table.chambers],
    }
    _write(path, obj)


def load_table(path):
    from .so5 import ChamberTable
    obj = _read(path)
    if obj.get("kind") != "so5":
        raise DatabaseError("not an so5 chamber database")
    chambers = [chamber_from_obj(c, 4) for c in obj["chambers"]]
    counts = obj["counts"]
    table = ChamberTable(
        chambers=chambers,
        n_basic_subsets=int(counts["basic_subsets"]),
        n_nbc=int(counts["nbc_subsets"]),
        n_maximal_cones=int(counts["maximal_cones"]),
        n_intersections=int(counts["intersections"]),
    )
    if table.n_chambers != int(counts["chambers"]):
        raise DatabaseError("chamber count does not match metadata")
    a_rows = [[int(x) for x in row] for row in obj["matrix_a"]]
    b_rows = [[int(x) for x in row] for row in obj["matrix_b"]]
    return table, a_rows, b_rows


def save_generic(path, a_rows, chambers, counts):
    obj = {
        "format_version": str(FORMAT_VERSION),
        "kind": "generic",
        "matrix_a": [[str(x) for x in row] for row in a_rows],
        "counts": {k: str(v) for k, v in sorted(counts.items())},
        "chambers": [chamber_to_obj(c, q) for c, q in chambers],
    }
    _write(path, obj)


def load_generic(path):
    obj = _read(path)
    if obj.get("kind") != "generic":
        raise DatabaseError("not a generic chamber database")
    a_rows = [[int(x) for x in row] for row in obj["matrix_a"]]
    dim = len(a_rows)
    chambers = [chamber_from_obj(c, dim) for c in obj["chambers"]]
    counts = {k: int(v) for k, v in obj["counts"].items()}
    return a_rows, chambers, counts


def _write(path, obj):
    text = json.dumps(obj, indent=1)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DatabaseError("cannot read database: %s" % exc)
    if obj.get("format_version") != str(FORMAT_VERSION):
        raise DatabaseError("unsupported format version")
    return obj
