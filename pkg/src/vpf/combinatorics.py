"""Combinatorics of a vector partition function: basic column subsets, the
finite torus subgroups they generate, no-broken-circuit bases, and the chamber
fan built by facet-neighbor traversal.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .cones import Cone, dot
from .exactlinalg import det, invert, rank


class RankDeficient(Exception):
    pass


class ClosureOverflow(Exception):
    pass


class DegenerateSeed(Exception):
    pass


class EmptyNbc(Exception):
    pass


@dataclass(frozen=True)
class BasicSubset:
    """n columns of A forming a basis; volume = |det| of that submatrix."""
    indices: tuple
    volume: int
    inv: tuple          # rows of A_sigma^{-1} as tuples of Fractions
    membership: tuple   # integer matrix M with M x >= 0  <=>  x in cone(sigma)

    def contains(self, x):
        return all(dot(row, x) >= 0 for row in self.membership)

    def contains_strictly(self, x):
        return all(dot(row, x) > 0 for row in self.membership)


def columns(a_rows):
    return [tuple(row[k] for row in a_rows) for k in range(len(a_rows[0]))]


def submatrix_columns(a_rows, indices):
    return [[row[k] for k in indices] for row in a_rows]


def enumerate_basic_subsets(a_rows):
    """All n-element column subsets of A with nonzero determinant."""
    n = len(a_rows)
    ncols = len(a_rows[0])
    if rank(a_rows) < n:
        raise RankDeficient("matrix has rank < number of rows")
    out = []
    for idx in combinations(range(ncols), n):
        sub = submatrix_columns(a_rows, idx)
        d = det(sub)
        if d == 0:
            continue
        inv = invert(sub)
        # integer membership test matrix: sign(det) * adjugate = |det| * inv
        vol = abs(d)
        memb = tuple(tuple(int(x * vol) for x in row) for row in inv)
        out.append(BasicSubset(indices=idx, volume=int(vol),
                               inv=tuple(tuple(row) for row in inv),
                               membership=memb))
    return out


def basic_cone(a_rows, subset):
    """cone(sigma): the simplicial cone generated by the chosen columns."""
    cols = columns(a_rows)
    return Cone.from_generators([cols[i] for i in subset.indices], len(a_rows))


def torus_points(a_rows, subsets):
    """Gamma: union over basic subsets of the groups T(sigma) in [0,1)^n.

    T(sigma) is the additive closure mod 1 of the rows of A_sigma^{-1},
    computed by graph-traversal closure; its order must equal vol(sigma).
    """
    gamma = set()
    for s in subsets:
        gens = [tuple(Fraction(x) % 1 for x in row) for row in s.inv]
        group = {tuple(Fraction(0) for _ in a_rows)}
        frontier = list(group)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((c + x) % 1 for c, x in zip(cur, g))
                if nxt not in group:
                    group.add(nxt)
                    if len(group) > s.volume:
                        raise ClosureOverflow(
                            "|T(sigma)| exceeded vol(sigma)=%d for sigma=%r"
                            % (s.volume, s.indices))
                    frontier.append(nxt)
        if len(group) != s.volume:
            raise ClosureOverflow(
                "|T(sigma)|=%d != vol(sigma)=%d for sigma=%r"
                % (len(group), s.volume, s.indices))
        gamma.update(group)
    return sorted(gamma)


def enumerate_nbc(a_rows):
    """Basic subsets without broken circuits.

    sigma = {i_1 < ... < i_n} is kept when there are no j and k > i_j such
    that (a_{i_1}, ..., a_{i_j}, a_k) is linearly dependent.  Built
    recursively, pruning as soon as a prefix acquires a broken circuit.
    """
    n = len(a_rows)
    ncols = len(a_rows[0])
    if rank(a_rows) < n:
        raise RankDeficient("matrix has rank < number of rows")
    cols = columns(a_rows)
    out = []

    def prefix_ok(prefix):
        # the new last element may not create a dependency with any later
        # column k; equivalently no a_k (k > last) lies in span(prefix)
        mat = [list(cols[i]) for i in prefix]
        r = rank(mat)
        if r < len(prefix):
            return False, r
        last = prefix[-1]
        for k in range(last + 1, ncols):
            if rank(mat + [list(cols[k])]) == r:
                return False, r
        return True, r

    def extend(prefix, start):
        if len(prefix) == n:
            sub = submatrix_columns(a_rows, prefix)
            d = det(sub)
            vol = abs(d)
            inv = invert(sub)
            memb = tuple(tuple(int(x * vol) for x in row) for row in inv)
            out.append(BasicSubset(indices=tuple(prefix), volume=int(vol),
                                   inv=tuple(tuple(row) for row in inv),
                                   membership=memb))
            return
        for i in range(start, ncols):
            cand = prefix + [i]
            ok, _ = prefix_ok(cand)
            if ok:
                extend(cand, i + 1)

    extend([], 0)
    return out


@dataclass
class ChamberFan:
    """Maximal cones of fan(A) with their containing basic cones."""
    cones: list                 # Cone, canonically sorted
    containing: list            # per cone: tuple of indices into `subsets`
    subsets: list               # all basic subsets
    adjacency: dict             # cone index -> set of neighbor cone indices


def _membership_pattern(subsets, x):
    """Indices of basic cones containing x; None when x is non-generic."""
    sel = []
    for i, s in enumerate(subsets):
        vals = [dot(row, x) for row in s.membership]
        if any(v == 0 for v in vals):
            return None
        if all(v > 0 for v in vals):
            sel.append(i)
    return sel


def _crossing_pattern(subsets, x_f, direction):
    """Basic cones containing x_f - epsilon*direction for infinitesimal
    epsilon > 0, decided by exact sign tests."""
    sel = []
    for i, s in enumerate(subsets):
        inside = True
        for row in s.membership:
            v = dot(row, x_f)
            if v > 0:
                continue
            if v < 0 or dot(row, direction) > 0:
                inside = False
                break
        if inside:
            sel.append(i)
    return sel


def build_fan(a_rows, subsets, rng=None):
    """All maximal cones of fan(A), by breadth-first facet-neighbor traversal
    from a seed cone around a generic interior point of the support."""
    n = len(a_rows)
    if rank(a_rows) < n:
        raise RankDeficient("matrix has rank < number of rows")
    if not subsets:
        raise RankDeficient("no basic subsets")
    rng = rng or random.Random(20240101)
    cols = columns(a_rows)

    seed_sel = None
    for _ in range(100):
        coeffs = [rng.randint(1, 10 ** 6) for _ in cols]
        p = tuple(sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(n))
        seed_sel = _membership_pattern(subsets, p)
        if seed_sel:
            break
    if not seed_sel:
        raise DegenerateSeed("no generic interior seed point found")

    def cone_of(sel):
        ineqs = []
        for i in sel:
            ineqs.extend(subsets[i].membership)
        return Cone.from_inequalities(list(dict.fromkeys(ineqs)), n)

    patterns = {frozenset(seed_sel): cone_of(seed_sel)}
    order = [frozenset(seed_sel)]
    adjacency = {frozenset(seed_sel): set()}
    queue = [frozenset(seed_sel)]
    while queue:
        key = queue.pop(0)
        cone = patterns[key]
        assert cone.dim == n, "fan is homogeneous: every maximal cone full-dim"
        for normal in cone.normals:
            frays = cone.facet_rays(normal)
            x_f = _generic_facet_point(frays, subsets, normal, rng)
            sel = _crossing_pattern(subsets, x_f, normal)
            if not sel:
                continue   # facet on the boundary of the support
            nkey = frozenset(sel)
            if nkey not in patterns:
                patterns[nkey] = cone_of(sel)
                adjacency[nkey] = set()
                order.append(nkey)
                queue.append(nkey)
            adjacency[key].add(nkey)
            adjacency[nkey].add(key)

    order.sort(key=lambda k: patterns[k].key())
    index = {k: i for i, k in enumerate(order)}
    return ChamberFan(
        cones=[patterns[k] for k in order],
        containing=[tuple(sorted(k)) for k in order],
        subsets=list(subsets),
        adjacency={index[k]: {index[j] for j in adjacency[k]} for k in order},
    )


def _generic_facet_point(facet_rays, subsets, normal, rng):
    """Positive combination of the facet's rays avoiding every basic-cone
    hyperplane that does not contain the whole facet."""
    d = len(normal)
    for _ in range(100):
        w = [rng.randint(1, 10 ** 6) for _ in facet_rays]
        x = tuple(sum(wi * r[i] for wi, r in zip(w, facet_rays)) for i in range(d))
        ok = True
        for s in subsets:
            for row in s.membership:
                if dot(row, x) == 0 and any(dot(row, r) != 0 for r in facet_rays):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return x
    raise DegenerateSeed("could not find generic relative-interior facet point")


def b_nb_for_cone(cone, nbc_subsets):
    """NBC basic subsets whose cone contains the given maximal cone."""
    out = [s for s in nbc_subsets
           if all(s.contains(r) for r in cone.generators())]
    if not out:
        raise EmptyNbc("no NBC basic cone contains the maximal cone %r" % (cone,))
    return out


def gamma_order_lcm(gamma):
    """lcm of the orders of all elements of Gamma (ambient cyclotomic order)."""
    m = 1
    for g in gamma:
        for c in g:
            m = lcm(m, Fraction(c).denominator)
    return m
