"""Exact rational and cyclotomic arithmetic, plus small dense matrix algebra.

Everything here works over Python ints and ``fractions.Fraction``; no floats
anywhere.  Matrices are plain lists of lists (row-major).
"""

from fractions import Fraction
from math import gcd


class SingularMatrix(Exception):
    pass


def mat_shape(m):
    return len(m), len(m[0]) if m else 0


def identity(n):
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = mat_shape(a)
    k2, p = mat_shape(b)
    assert k == k2
    bt = list(zip(*b))
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in bt] for ra in a]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def det(m):
    """Exact determinant of a square matrix over Q (fraction-free for ints)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det: matrix not square")
    if all(isinstance(x, int) for row in m for x in row):
        return Fraction(_det_bareiss([row[:] for row in m]))
    # rational fallback: plain fraction Gaussian elimination
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        d *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * d


def _det_bareiss(a):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def invert(m):
    """Exact inverse over Q.  Raises SingularMatrix when det = 0."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rank(m):
    """Exact rank over Q."""
    if not m or not m[0]:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = mat_shape(a)
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        for i in range(r + 1, rows):
            if a[i][col] != 0:
                f = a[i][col] * inv
                for c in range(col, cols):
                    a[i][c] -= f * a[r][c]
        r += 1
        if r == rows:
            break
    return r


def rref(m):
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = mat_shape(a)
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][col] for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def nullspace(m):
    """Basis of the right null space over Q (list of Fraction vectors)."""
    red, pivots = rref(m)
    cols = len(m[0]) if m else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def primitive(vec):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    from math import lcm
    denoms = [Fraction(x).denominator for x in vec]
    mult = 1
    for d in denoms:
        mult = lcm(mult, d)
    ints = [int(Fraction(x) * mult) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# cyclotomic arithmetic
# ---------------------------------------------------------------------------

def cyclotomic_poly(m):
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    # x^m - 1 = prod_{d | m} Phi_d; divide out the proper divisors.
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return num


def _poly_divexact(a, b):
    a = a[:]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c != 0:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert all(x == 0 for x in a[: len(b) - 1])
    return q


class CyclotomicContext:
    """Arithmetic in Q(zeta_m), elements reduced modulo Phi_m.

    One fixed ambient order m per computation; ``root(r)`` is zeta_m^r.
    """

    def __init__(self, m):
        self.m = m
        phi = cyclotomic_poly(m)
        self.degree = len(phi) - 1
        self._phi = phi
        # x^degree = -(phi[0] + ... + phi[degree-1] x^{degree-1}); Phi_m is monic
        self._top = [-c for c in phi[:-1]]
        self._pow = [tuple(self._top)]  # x^(degree+k) mod Phi_m at index k

    def zero(self):
        return Cyclo(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.rational(Fraction(1))

    def rational(self, q):
        c = [Fraction(0)] * self.degree
        c[0] = Fraction(q)
        return Cyclo(self, tuple(c))

    def root(self, r):
        """zeta_m^r as a reduced element."""
        r %= self.m
        c = [Fraction(0)] * self.m
        c[r] = Fraction(1)
        return Cyclo(self, tuple(self._reduce(c)))

    def root_of_unity(self, theta):
        """e^{2 pi i theta} for rational theta with denominator dividing m."""
        theta = Fraction(theta) % 1
        assert self.m % theta.denominator == 0
        return self.root(int(theta * self.m))

    def _reduce(self, coeffs):
        c = list(coeffs)
        if len(c) < self.degree:
            c += [Fraction(0)] * (self.degree - len(c))
        for k in range(len(c) - 1, self.degree - 1, -1):
            lead = c[k]
            if lead != 0:
                red = self._pow_of(k)
                for j, rj in enumerate(red):
                    c[j] += lead * rj
            c.pop()
        return c

    def _pow_of(self, k):
        # x^k mod Phi_m for k >= degree, computed on demand and cached
        while len(self._pow) <= k - self.degree:
            prev = self._pow[-1]
            lead = prev[-1]
            cur = [Fraction(0)] + list(prev[:-1])
            if lead != 0:
                cur = [c + lead * t for c, t in zip(cur, self._top)]
            self._pow.append(tuple(cur))
        return self._pow[k - self.degree]


class Cyclo:
    """Element of Q(zeta_m) in the power basis 1, x, ..., x^{deg(Phi_m)-1}."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclo(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.ctx, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        d = self.ctx.degree
        prod = [Fraction(0)] * (2 * d - 1 if d else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclo(self.ctx, tuple(self.ctx._reduce(prod)))

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            assert other.ctx is self.ctx
            return other
        return self.ctx.rational(other)

    def inverse(self):
        """Multiplicative inverse via extended Euclid in Q[x] mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # extended gcd of self (as poly) and Phi_m
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        b = list(self.ctx._phi)
        s0, s1 = [Fraction(1)], []
        while b:
            q, r = _poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # a is now gcd (a nonzero constant since Phi_m is irreducible)
        assert len(a) == 1
        inv = [c / a[0] for c in s0]
        return Cyclo(self.ctx, tuple(self.ctx._reduce([Fraction(c) for c in inv])))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("cyclotomic element is not rational: %r" % (self.coeffs,))
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, Cyclo) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Cyclo(m=%d, %r)" % (self.ctx.m, self.coeffs)


def _poly_divmod(a, b):
    a = a[:]
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c != 0:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    r = a[: len(b) - 1]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out
