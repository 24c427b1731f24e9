"""Weight multiplicities of so5(C) via the partition-function engine.

The Littelmann pattern polytope for the reduced word s1 s2 s1 s2 turns the
multiplicity K^lambda_beta into a vector partition function evaluated at an
integer point depending linearly on (lambda, beta).  This module holds the
fixed reduction matrices, the chamber table over (lambda1, lambda2, beta1,
beta2), the brute-force pattern-counting oracle, and the convenience
formulas for the zero weight and near-highest weights.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import Cone, dot
from .combinatorics import (enumerate_basic_subsets, enumerate_nbc,
                            build_fan, torus_points, gamma_order_lcm)
from .exactlinalg import CyclotomicContext, rank
from .quasipoly import QuasiPolynomial
from .residue import chamber_exponential_poly


class GluingMismatch(Exception):
    pass


class NonIntegerValue(Exception):
    pass


class NegativeValue(Exception):
    pass


def build_matrices():
    """The 8x10 system matrix and the 8x4 parameter matrix of the
    slack-variable form of the pattern polytope (columns: a22, a11, a12,
    a13, s1, s2, t1, t2, t3, t4)."""
    a = [
        [0, 2, -1, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 1, -2, 0, -1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, -2, 0, 0, 0, 1, 0, 0],
        [0, 1, -1, 2, 0, 0, 0, 0, 1, 0],
        [1, -2, 2, -2, 0, 0, 0, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    ]
    b = [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    return a, b


@dataclass
class ChamberTable:
    """Glued chambers in (lambda1, lambda2, beta1, beta2)-space with their
    quasi-polynomials, plus the build counts."""
    chambers: list                    # list of (Cone in R^4, QuasiPolynomial)
    n_basic_subsets: int = 0
    n_nbc: int = 0
    n_maximal_cones: int = 0
    n_intersections: int = 0

    @property
    def n_chambers(self):
        return len(self.chambers)

    def find_chamber(self, x):
        """Lowest-index chamber containing x, or None."""
        for i, (cone, _) in enumerate(self.chambers):
            if cone.contains(x):
                return i
        return None


def build_chamber_table(workers=None, progress=None):
    """Run the full pipeline: fan, torus points, NBC bases, residues,
    pullback along the parameter matrix, and gluing."""
    a_rows, b_rows = build_matrices()
    n = len(a_rows)
    assert rank(a_rows) == n

    subsets = enumerate_basic_subsets(a_rows)
    gamma = torus_points(a_rows, subsets)
    nbc = enumerate_nbc(a_rows)
    fan = build_fan(a_rows, subsets)
    if progress:
        progress("maximal cones: %d" % len(fan.cones))

    # maximal cones whose intersection with the parameter subspace is
    # 4-dimensional, keyed by the pulled-back cone
    intersections = {}
    for ci, cone in enumerate(fan.cones):
        pulled = _pullback_cone(cone, b_rows)
        if pulled.dim == 4 and pulled not in intersections:
            intersections[pulled] = ci
    if progress:
        progress("4-dimensional intersections: %d" % len(intersections))

    ctx = CyclotomicContext(gamma_order_lcm(gamma))
    cache = {}
    _populate_residue_cache(a_rows, fan, nbc, gamma, ctx, cache,
                            [ci for ci in intersections.values()], workers)
    entries = []
    for pulled, ci in sorted(intersections.items(), key=lambda kv: kv[0].key()):
        expoly = chamber_exponential_poly(a_rows, fan.cones[ci], nbc, gamma,
                                          ctx, cache)
        qp = expoly.pullback(b_rows).to_quasipolynomial()
        entries.append((pulled, qp))

    glued = _glue(entries)
    if progress:
        progress("glued chambers: %d" % len(glued))
    return ChamberTable(
        chambers=glued,
        n_basic_subsets=len(subsets),
        n_nbc=len(nbc),
        n_maximal_cones=len(fan.cones),
        n_intersections=len(entries),
    )


def _pullback_cone(cone, b_rows):
    d = len(b_rows[0])
    normals = [tuple(sum(nv[i] * b_rows[i][j] for i in range(len(b_rows)))
                     for j in range(d))
               for nv in cone.normals]
    return Cone.from_inequalities(normals, d)


def _populate_residue_cache(a_rows, fan, nbc, gamma, ctx, cache, cone_ids, workers):
    """Optionally precompute the (sigma, g) residues in a thread pool; the
    summation itself stays in canonical order, so results are deterministic
    regardless of scheduling."""
    from .residue import sigma_g_residue
    needed = []
    for ci in cone_ids:
        cone = fan.cones[ci]
        from .combinatorics import b_nb_for_cone
        for subset in b_nb_for_cone(cone, nbc):
            for g in gamma:
                key = (subset.indices, g)
                if key not in cache:
                    cache[key] = None
                    needed.append((key, subset, g))
    if workers and workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                lambda item: (item[0], sigma_g_residue(a_rows, item[1], item[2], ctx)),
                needed)
            for key, res in results:
                cache[key] = res
    else:
        for key, subset, g in needed:
            cache[key] = sigma_g_residue(a_rows, subset, g, ctx)


def _glue(entries):
    """Merge facet-neighbors carrying the same quasi-polynomial."""
    n = len(entries)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(n), 2):
        if entries[i][1] == entries[j][1]:
            if entries[i][0].intersect(entries[j][0]).dim == 3:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    glued = []
    for members in groups.values():
        qp = entries[members[0]][1]
        gens = []
        for i in members:
            if entries[i][1] != qp:
                raise GluingMismatch("unequal quasi-polynomials glued together")
            gens.extend(entries[i][0].generators())
        cone = Cone.from_generators(gens, 4)
        for i in members:
            for g in entries[i][0].generators():
                assert cone.contains(g)
        glued.append((cone, qp))
    glued.sort(key=lambda cq: cq[0].key())
    return glued


# -- queries -----------------------------------------------------------------

def multiplicity(lam, beta, table):
    """K^lambda_beta: dimension of the weight space lambda - beta."""
    l1, l2 = lam
    b1, b2 = beta
    if l1 < 0 or l2 < 0:
        return 0
    x = (l1, l2, b1, b2)
    idx = table.find_chamber(x)
    if idx is None:
        return 0
    value = table.chambers[idx][1].evaluate(x)
    if value.denominator != 1:
        raise NonIntegerValue("quasi-polynomial value %s at %r" % (value, x))
    if value < 0:
        raise NegativeValue("negative multiplicity %s at %r" % (value, x))
    return int(value)


def brute_force_multiplicity(lam, beta):
    """Direct count of integer pattern points (a22, a11, a12, a13) with
    a22 + a12 = beta1 and a11 + a13 = beta2 inside the pattern polytope."""
    l1, l2 = lam
    b1, b2 = beta
    if l1 < 0 or l2 < 0:
        return 0
    count = 0
    for a13 in range(0, min(l2, b2) + 1):
        a11 = b2 - a13
        if a11 < 0:
            continue
        for a12 in range(0, b1 + 1):
            a22 = b1 - a12
            if not (2 * a11 >= a12 >= 2 * a13 >= 0 and a22 >= 0):
                continue
            if a12 > l1 + 2 * a13:
                continue
            if a11 > l2 + a12 - 2 * a13:
                continue
            if a22 > l1 + 2 * a11 - 2 * a12 + 2 * a13:
                continue
            count += 1
    return count


def weyl_dimension(lam):
    """Total dimension of the simple module with the given highest weight."""
    l1, l2 = lam
    num = (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) * (l1 + 2 * l2 + 3)
    assert num % 6 == 0
    return num // 6


def character(lam, table):
    """All beta with positive multiplicity, as a dict beta -> K^lambda_beta."""
    l1, l2 = lam
    if l1 < 0 or l2 < 0:
        return {}
    # the lowest weight is -lambda, i.e. beta = 2*lambda in root coordinates
    out = {}
    b1_max = 2 * l1 + 2 * l2
    b2_max = l1 + 2 * l2
    for b1 in range(0, b1_max + 1):
        for b2 in range(0, b2_max + 1):
            k = multiplicity(lam, (b1, b2), table)
            if k > 0:
                out[(b1, b2)] = k
    return out


def weight_zero_dim(i, j):
    """Multiplicity of the zero weight in the module with highest weight
    i*alpha1 + j*alpha2; zero unless i/2 <= j <= i."""
    if i < 0 or j < 0 or 2 * j < i or j > i:
        return 0
    val = Fraction(i, 2) - i * i + 3 * i * j - 2 * j * j + Fraction(3 + (-1) ** i, 4)
    assert val.denominator == 1 and val >= 0
    return int(val)


NEAR_HIGHEST = {
    (1, 0): (1, lambda l1, l2: l1 >= 1),
    (0, 1): (1, lambda l1, l2: l2 >= 1),
    (1, 1): (2, lambda l1, l2: l1 >= 1 and l2 >= 1),
    (2, 1): (3, lambda l1, l2: l1 >= 2 and l2 >= 1),
}


def near_highest(lam, eps, table=None):
    """Multiplicity of the weight lambda - eps for eps one of alpha1,
    alpha2, alpha1+alpha2, 2*alpha1+alpha2 (given in alpha-coordinates)."""
    eps = tuple(eps)
    if eps not in NEAR_HIGHEST:
        raise ValueError("eps must be one of %s" % sorted(NEAR_HIGHEST))
    value, hyp = NEAR_HIGHEST[eps]
    l1, l2 = lam
    if l1 >= 0 and l2 >= 0 and hyp(l1, l2):
        return value
    if table is not None:
        return multiplicity(lam, eps, table)
    return brute_force_multiplicity(lam, eps)


def lie_reparam(lam, beta):
    """Translate (lambda, beta) into the parametrization used by the LiE
    calculator: swapped simple roots and absolute weights."""
    l1, l2 = lam
    b1, b2 = beta
    lam_t = (l2, l1)
    mu_t = (l2 + b1 - 2 * b2, l1 - 2 * b1 + 2 * b2)
    return lam_t, mu_t


def induced_decomposition(lam, table):
    """Slices of the chambers at a fixed dominant weight: for each chamber
    with a nonempty slice, its polygon in the (beta1, beta2)-plane as a list
    of vertices in counterclockwise order."""
    l1, l2 = lam
    out = []
    for idx, (cone, _) in enumerate(table.chambers):
        ineqs = []
        for nv in cone.serialized_normals():
            # nv . (l1, l2, b1, b2) >= 0 becomes a*b1 + b*b2 >= c
            ineqs.append((nv[2], nv[3], -(nv[0] * l1 + nv[1] * l2)))
        verts = _polygon_vertices(ineqs)
        if verts:
            out.append((idx, verts))
    return out


def _polygon_vertices(ineqs):
    """Vertices of {x in R^2 : a x1 + b x2 >= c}, via homogenization."""
    normals = [(a, b, -c) for a, b, c in ineqs] + [(0, 0, 1)]
    cone = Cone.from_inequalities(normals, 3)
    verts = []
    for r in cone.generators():
        if r[2] > 0:
            verts.append((Fraction(r[0], r[2]), Fraction(r[1], r[2])))
        elif r[2] == 0 and any(r):
            # unbounded slice: cannot happen inside the weight support
            raise AssertionError("unbounded chamber slice")
    verts = sorted(set(verts))
    if not verts:
        return []
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def compare(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = (u[0] - cx) * (v[1] - cy) - (u[1] - cy) * (v[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    import functools
    return sorted(verts, key=functools.cmp_to_key(compare))
