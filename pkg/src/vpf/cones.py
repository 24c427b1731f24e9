"""Exact polyhedral cone computations via the double description method.

Cones live in Z^d and are stored in a canonical half-space form: a set of
primitive facet normals plus (for cones that are not full-dimensional) a
canonical basis of linear equations cutting out their span.  Canonical forms
make deduplication and chamber gluing plain set operations.
"""

from fractions import Fraction

from .exactlinalg import nullspace, primitive, rank, rref


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def dd_pair(normals, d):
    """Rays and lineality of {x in R^d : v.x >= 0 for all v in normals}.

    Returns (lineality basis, extreme rays), all primitive integer tuples.
    """
    lineality = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays = []          # primitive integer tuples
    masks = []         # bitmask of processed inequalities tight on each ray
    processed = []
    for a in normals:
        bit = 1 << len(processed)
        sl = [dot(a, l) for l in lineality]
        if any(s != 0 for s in sl):
            j = next(i for i, s in enumerate(sl) if s != 0)
            l0, s0 = lineality[j], sl[j]
            if s0 < 0:
                l0, s0 = tuple(-x for x in l0), -s0
            new_lin = []
            for i, l in enumerate(lineality):
                if i == j:
                    continue
                new_lin.append(primitive(tuple(s0 * x - sl[i] * y for x, y in zip(l, l0))))
            lineality = new_lin
            new_rays, new_masks = [], []
            for r, mk in zip(rays, masks):
                s = dot(a, r)
                rr = primitive(tuple(s0 * x - s * y for x, y in zip(r, l0)))
                new_rays.append(rr)
                new_masks.append(mk | bit)   # projected rays are tight on a
            # the pivot lineality direction survives as a ray; earlier
            # inequalities all vanish on the lineality space, so it is tight
            # on every one of them
            new_rays.append(primitive(l0))
            new_masks.append(bit - 1)
            rays, masks = new_rays, new_masks
        else:
            vals = [dot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            zer = [i for i, v in enumerate(vals) if v == 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            keep_rays = [rays[i] for i in pos + zer]
            keep_masks = [masks[i] | (bit if vals[i] == 0 else 0) for i in pos + zer]
            for ip in pos:
                for im in neg:
                    common = masks[ip] & masks[im]
                    # combinatorial adjacency test: no third ray tight on all
                    # inequalities tight on both parents
                    adjacent = True
                    for k, mk in enumerate(masks):
                        if k != ip and k != im and (mk & common) == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    p, mn = rays[ip], rays[im]
                    vp, vm = vals[ip], vals[im]
                    comb = primitive(tuple(vp * x - vm * y for x, y in zip(mn, p)))
                    keep_rays.append(comb)
                    keep_masks.append((masks[ip] & masks[im]) | bit)
            rays, masks = keep_rays, keep_masks
        processed.append(a)
        # dedup (combinations can reproduce an existing ray)
        seen = {}
        for r, mk in zip(rays, masks):
            if r in seen:
                seen[r] |= mk
            else:
                seen[r] = mk
        rays = list(seen.keys())
        masks = [seen[r] for r in rays]
    return lineality, rays


def _span_projector(span_vectors, d):
    """Matrix of the orthogonal projection onto span(span_vectors), over Q."""
    from .exactlinalg import invert, mat_mul
    basis_rows, _ = rref(span_vectors)
    if not basis_rows:
        return [[Fraction(0)] * d for _ in range(d)]
    g = basis_rows
    gt = list(zip(*g))
    gram = [[dot(r1, r2) for r2 in g] for r1 in g]
    gram_inv = invert(gram)
    # P = G^t (G G^t)^-1 G
    m1 = mat_mul([list(r) for r in gt], gram_inv)
    return mat_mul(m1, g)


class Cone:
    """Polyhedral cone in canonical half-space representation.

    ``normals``   -- primitive facet normals, lexicographically sorted
    ``equations`` -- canonical (rref-based) primitive basis of the span's
                     orthogonal complement; empty for full-dimensional cones
    """

    __slots__ = ("d", "normals", "equations", "rays", "lineality", "dim")

    def __init__(self, d, normals, equations, rays, lineality, dim):
        self.d = d
        self.normals = normals
        self.equations = equations
        self.rays = rays
        self.lineality = lineality
        self.dim = dim

    # -- construction -------------------------------------------------------

    @classmethod
    def from_inequalities(cls, normals, d, equations=()):
        """Canonical cone {x : n.x >= 0, e.x = 0}; input may be redundant."""
        ineqs = [tuple(v) for v in normals]
        for e in equations:
            ineqs.append(tuple(e))
            ineqs.append(tuple(-x for x in e))
        seen = []
        for v in dict.fromkeys(ineqs):
            if any(v):
                seen.append(v)
        lineality, rays = dd_pair(seen, d)
        return cls._canonicalize(d, seen, lineality, rays)

    @classmethod
    def from_generators(cls, gens, d):
        """Canonical cone generated by integer vectors ``gens``."""
        gens = [primitive(g) for g in gens]
        gens = [g for g in dict.fromkeys(gens) if any(g)]
        if not gens:
            return cls.from_inequalities([], d, equations=[tuple(int(i == j) for j in range(d)) for i in range(d)])
        # H-representation = ray description of the dual cone
        dual_lin, dual_rays = dd_pair(gens, d)
        return cls.from_inequalities(dual_rays, d, equations=dual_lin)

    @classmethod
    def _canonicalize(cls, d, ineqs, lineality, rays):
        span_vecs = [list(v) for v in rays] + [list(v) for v in lineality]
        if span_vecs:
            dim = rank(span_vecs)
        else:
            dim = 0
        # equations: canonical basis of span^perp
        if dim < d:
            if span_vecs:
                perp = nullspace(span_vecs)
            else:
                perp = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
            eq_rows, _ = rref(perp)
            equations = tuple(sorted(_sign_normal(primitive(r)) for r in eq_rows))
        else:
            equations = ()
        # facet normals: inequalities whose tight rays span a codim-1 subset
        # of the cone, projected onto the span and made primitive
        proj = None
        facet_normals = set()
        for v in ineqs:
            if all(dot(v, r) == 0 for r in rays) and all(dot(v, l) == 0 for l in lineality):
                continue  # vanishes on the cone: subsumed by the equations
            tight = [list(r) for r in rays if dot(v, r) == 0]
            tight += [list(l) for l in lineality]
            trank = rank(tight) if tight else 0
            if trank != dim - 1:
                continue
            if dim < d:
                if proj is None:
                    proj = _span_projector(span_vecs, d)
                pv = [sum(proj[i][j] * v[j] for j in range(d)) for i in range(d)]
                facet_normals.add(primitive(pv))
            else:
                facet_normals.add(primitive(v))
        normals = tuple(sorted(facet_normals))
        rays = tuple(sorted(rays))
        lineality = tuple(sorted(_sign_normal(l) for l in lineality))
        return cls(d, normals, equations, rays, lineality, dim)

    # -- queries ------------------------------------------------------------

    def contains(self, x):
        return (all(dot(n, x) >= 0 for n in self.normals)
                and all(dot(e, x) == 0 for e in self.equations))

    def contains_strictly(self, x):
        """Membership in the relative interior."""
        return (all(dot(n, x) > 0 for n in self.normals)
                and all(dot(e, x) == 0 for e in self.equations))

    def generators(self):
        """Integer vectors generating the cone (rays plus +-lineality)."""
        gens = list(self.rays)
        for l in self.lineality:
            gens.append(l)
            gens.append(tuple(-x for x in l))
        return gens

    def interior_point(self, weights=None):
        """A point in the relative interior (positive combination of rays)."""
        gens = list(self.rays) + list(self.lineality)
        if not gens:
            return tuple(0 for _ in range(self.d))
        if weights is None:
            weights = [1] * len(gens)
        return tuple(sum(w * g[i] for w, g in zip(weights, gens)) for i in range(self.d))

    def intersect(self, other):
        assert self.d == other.d
        return Cone.from_inequalities(
            list(self.normals) + list(other.normals), self.d,
            equations=list(self.equations) + list(other.equations))

    def facets(self):
        """Codimension-1 faces, one per facet normal."""
        out = []
        for n in self.normals:
            out.append(Cone.from_inequalities(
                [m for m in self.normals if m != n], self.d,
                equations=list(self.equations) + [n]))
        return out

    def facet_rays(self, normal):
        """Rays of this cone lying on the given facet."""
        return [r for r in self.rays if dot(normal, r) == 0]

    # -- canonical form -----------------------------------------------------

    def key(self):
        """Canonical hashable identity (serialized normal set)."""
        eqs = []
        for e in self.equations:
            eqs.append(e)
            eqs.append(tuple(-x for x in e))
        return (self.d, tuple(sorted(list(self.normals) + eqs)))

    def serialized_normals(self):
        """All inequality normals in canonical order (equations as +- pairs)."""
        return list(self.key()[1])

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Cone(d=%d, dim=%d, normals=%r, equations=%r)" % (
            self.d, self.dim, self.normals, self.equations)


def _sign_normal(v):
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)
