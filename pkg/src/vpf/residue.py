"""Iterated residues of the partition generating function.

For a basic subset sigma and a torus point g, the generating function is
rewritten in the coordinates z_j = <u, a_{i_j}>, every denominator factor is
expanded around z = 0 (a Laurent tail 1/ell for factors whose root of unity
is 1, a Taylor series otherwise), and the residues are extracted innermost
variable first.  Homogeneity pins down exactly which expansion orders can
contribute, so the whole computation is a finite exact sum.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactlinalg import primitive
from .polynomial import Poly
from .quasipoly import ExponentialPoly


class ZeroDenominatorFactor(Exception):
    pass


# -- scalar series coefficients ---------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_like(upto):
    """Coefficients b_d, d = -1..upto, of 1/(1 - e^{-w}) = sum b_d w^d."""
    # invert q(w) = (1 - e^{-w})/w = sum_j (-1)^j w^j / (j+1)!
    q = [Fraction((-1) ** j, factorial(j + 1)) for j in range(upto + 2)]
    inv = _invert_series(q, upto + 2)
    return {d: inv[d + 1] for d in range(-1, upto + 1)}


def _invert_series(coeffs, length):
    out = [None] * length
    out[0] = 1 / Fraction(coeffs[0]) if not hasattr(coeffs[0], "inverse") else coeffs[0].inverse()
    for k in range(1, length):
        acc = None
        for j in range(1, k + 1):
            t = coeffs[j] * out[k - j]
            acc = t if acc is None else acc + t
        out[k] = -(out[0] * acc)
    return out


def _nonsingular_series(zeta, upto, ctx):
    """Taylor coefficients of 1/(1 - zeta e^{-w}) up to order ``upto``."""
    psi = [ctx.one() - zeta]
    for j in range(1, upto + 1):
        psi.append(zeta * Fraction(-((-1) ** j), factorial(j)))
    return _invert_series(psi, upto + 1)


# -- simple-term residue machinery ------------------------------------------

def _normalize_form(coeffs):
    """Split a rational linear form into (primitive integer direction, scalar)."""
    direction = primitive(coeffs)
    if not any(direction):
        raise ZeroDenominatorFactor("zero linear form in denominator")
    pivot = next(i for i, c in enumerate(direction) if c != 0)
    if direction[pivot] < 0:
        direction = tuple(-x for x in direction)
    scalar = Fraction(coeffs[pivot]) / direction[pivot]
    return direction, scalar


def _iterated_residue(numer, den, nz, nvars):
    """res_{z_nz} ... res_{z_1} of numer / prod den[form]^power.

    ``numer`` is a Poly in nvars variables (z variables first), ``den`` maps
    primitive integer forms over the z variables to positive powers.
    """
    terms = [(numer, dict(den))]
    for v in range(nz):
        unit = tuple(int(i == v) for i in range(nz))
        new_terms = []
        for num, d in terms:
            q = d.pop(unit, 0)
            if q == 0:
                continue   # regular at z_v = 0: residue vanishes
            work = [(num, d)]
            for _ in range(q - 1):
                work = _differentiate(work, v, nz)
            scale = Fraction(1, factorial(q - 1))
            for num2, d2 in work:
                res = _restrict(num2.scale(scale), d2, v, nz)
                if res is not None:
                    new_terms.append(res)
        terms = _combine(new_terms)
    total = Poly(nvars)
    for num, d in terms:
        assert not d, "denominator factors survived all residues"
        total = total + num
    return total


def _differentiate(terms, v, nz):
    out = []
    for num, d in terms:
        dn = num.derivative(v)
        if not dn.is_zero():
            out.append((dn, dict(d)))
        for form, p in d.items():
            c = form[v]
            if c == 0:
                continue
            d2 = dict(d)
            d2[form] = p + 1
            out.append((num.scale(Fraction(-p * c)), d2))
    return _combine(out)


def _restrict(num, den, v, nz):
    """Substitute z_v = 0 after the derivative pass; denominator forms lose
    their z_v component and are re-normalized to primitive directions."""
    num = num.subst_zero(v)
    if num.is_zero():
        return None
    new_den = {}
    for form, p in den.items():
        restricted = form[:v] + (0,) + form[v + 1:]
        if not any(restricted):
            raise ZeroDenominatorFactor("denominator form vanished under restriction")
        direction, scalar = _normalize_form(restricted)
        num = num.scale(Fraction(1) / scalar ** p)
        new_den[direction] = new_den.get(direction, 0) + p
    return (num, new_den)


def _combine(terms):
    merged = {}
    for num, d in terms:
        key = tuple(sorted(d.items()))
        if key in merged:
            merged[key] = merged[key] + num
        else:
            merged[key] = num
    return [(num, dict(key)) for key, num in merged.items() if not num.is_zero()]


# -- the Kostant-function residue for one (sigma, g) pair --------------------

def sigma_g_residue(a_rows, subset, g, ctx):
    """ires_sigma of the g-twisted generating function, as a polynomial in
    h_1..h_n with cyclotomic coefficients (the e^{2 pi i <g,h>} character is
    NOT included; the caller tracks it per chamber coset)."""
    n = len(a_rows)
    ncols = len(a_rows[0])
    cols = [tuple(row[k] for row in a_rows) for k in range(ncols)]
    inv = subset.inv  # rows of A_sigma^{-1}

    # z-coordinates of each column: ell_k = sum_j c_kj z_j
    ell = []
    for k in range(ncols):
        ell.append(tuple(sum(Fraction(inv[j][i]) * cols[k][i] for i in range(n))
                         for j in range(n)))
    # character angles theta_k = <g, a_k> mod 1
    theta = [sum(Fraction(gi) * ai for gi, ai in zip(g, cols[k])) % 1
             for k in range(ncols)]
    singular = [theta[k] == 0 for k in range(ncols)]
    s = sum(singular)
    if s < n:
        return Poly(n)   # not enough pole depth: the iterated residue is 0

    budget = s - n
    b_coeffs = _bernoulli_like(budget)
    taylor = {}
    for k in range(ncols):
        if not singular[k]:
            zeta = ctx.root_of_unity(-theta[k])
            taylor[k] = _nonsingular_series(zeta, budget, ctx)

    # H_j(h): coefficient of z_j in <u, h> expressed in sigma-coordinates
    nvars = 2 * n   # z_1..z_n then h_1..h_n
    hforms = [Poly.linear_form(nvars, [Fraction(0)] * n + [Fraction(inv[j][i]) for i in range(n)])
              for j in range(n)]
    zvars = [Poly.variable(nvars, j, Fraction(1)) for j in range(n)]
    exponent = Poly(nvars)
    for j in range(n):
        exponent = exponent + zvars[j] * hforms[j]

    ell_polys = [Poly.linear_form(nvars, list(e) + [Fraction(0)] * n) for e in ell]

    total = Poly(n)
    for dist in _distributions(budget, ncols):
        m = dist[0]
        scalar = ctx.rational(Fraction(1, factorial(m)))
        numer = exponent.pow(m)
        den = {}
        ok = True
        for k in range(ncols):
            e_k = dist[k + 1]
            if singular[k]:
                d_k = e_k - 1
                scalar = scalar * b_coeffs[d_k]
                if d_k == -1:
                    direction, c = _normalize_form(ell[k])
                    scalar = scalar * (Fraction(1) / c)
                    den[direction] = den.get(direction, 0) + 1
                elif d_k >= 1:
                    numer = numer * ell_polys[k].pow(d_k)
            else:
                coeff = taylor[k][e_k]
                if coeff.is_zero():
                    ok = False
                    break
                scalar = scalar * coeff
                if e_k >= 1:
                    numer = numer * ell_polys[k].pow(e_k)
        if not ok or numer.is_zero() or scalar.is_zero():
            continue
        res = _iterated_residue(numer, den, n, nvars)
        if res.is_zero():
            continue
        # drop the (now exponent-free) z slots
        assert all(sum(e[:n]) == 0 for e in res.terms)
        hres = Poly(n, {e[n:]: c for e, c in res.terms.items()})
        total = total + hres.scale(scalar)
    return total


def _distributions(budget, ncols):
    """All ways to spend the excess expansion budget on the numerator
    (slot 0) and the N denominator factors (slots 1..N)."""
    out = []

    def rec(slot, remaining, cur):
        if slot == ncols:
            out.append(tuple(cur) + (remaining,))
            return
        for e in range(remaining + 1):
            cur.append(e)
            rec(slot + 1, remaining - e, cur)
            cur.pop()

    rec(0, budget, [])
    return out


def chamber_exponential_poly(a_rows, cone, nbc_subsets, gamma, ctx, cache=None):
    """The chamber's partition function as an exponential polynomial in h:
    sum over characters g of e^{2 pi i <g,h>} times a cyclotomic-coefficient
    polynomial."""
    from .combinatorics import b_nb_for_cone

    n = len(a_rows)
    b_nb = b_nb_for_cone(cone, nbc_subsets)
    expoly = ExponentialPoly(n, ctx)
    for subset in b_nb:
        w = Fraction(1, subset.volume)
        for g in gamma:
            key = (subset.indices, g)
            if cache is not None and key in cache:
                res = cache[key]
            else:
                res = sigma_g_residue(a_rows, subset, g, ctx)
                if cache is not None:
                    cache[key] = res
            if res.is_zero():
                continue
            expoly.add_part(g, res.scale(ctx.rational(w)))
    return expoly
