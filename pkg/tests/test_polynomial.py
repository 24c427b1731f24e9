from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from vpf.polynomial import Poly
from vpf.quasipoly import QuasiPolynomial


def poly_from_coeffs(coeffs):
    """Dense univariate [c0, c1, ...] -> sparse Poly in one variable."""
    return Poly(1, {(i,): Fraction(c) for i, c in enumerate(coeffs) if c})


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=5)


@given(coeff_lists, coeff_lists, st.integers(-4, 4))
@settings(max_examples=80, deadline=None)
def test_ring_operations_agree_with_evaluation(a, b, x):
    pa, pb = poly_from_coeffs(a), poly_from_coeffs(b)
    va = sum(Fraction(c) * x ** i for i, c in enumerate(a))
    vb = sum(Fraction(c) * x ** i for i, c in enumerate(b))
    assert pa.evaluate((x,)) == va
    assert (pa + pb).evaluate((x,)) == va + vb
    assert (pa - pb).evaluate((x,)) == va - vb
    assert (pa * pb).evaluate((x,)) == va * vb
    assert pa.pow(2).evaluate((x,)) == va * va


@given(coeff_lists)
@settings(max_examples=60, deadline=None)
def test_derivative_of_power(a):
    p = poly_from_coeffs(a)
    d = p.derivative(0)
    for i, c in enumerate(a):
        if i >= 1 and c:
            assert d.terms.get((i - 1,), 0) + 0 == i * c


def test_multivariate_substitution():
    # p(x, y) = x^2 + x y; substitute x -> u + v, y -> 2u (3 new vars u,v,w)
    p = Poly(2, {(2, 0): Fraction(1), (1, 1): Fraction(1)})
    images = [Poly.linear_form(3, [Fraction(1), Fraction(1), Fraction(0)]),
              Poly.linear_form(3, [Fraction(2), Fraction(0), Fraction(0)])]
    q = p.substitute(images)
    for u, v, w in [(1, 2, 0), (3, -1, 5), (0, 0, 0), (-2, 7, 1)]:
        x, y = u + v, 2 * u
        assert q.evaluate((u, v, w)) == x * x + x * y


def test_subst_zero_and_total_degree():
    p = Poly(2, {(2, 1): Fraction(3), (0, 1): Fraction(5)})
    assert p.total_degree() == 3
    q = p.subst_zero(0)
    assert q.terms == {(0, 1): Fraction(5)}
    assert Poly(2).total_degree() == -1


def test_canonical_items_order():
    p = Poly(2, {(0, 0): Fraction(1), (1, 0): Fraction(2),
                 (0, 2): Fraction(3)})
    degrees = [sum(e) for e, _ in p.canonical_items()]
    assert degrees == sorted(degrees)


def test_quasipolynomial_evaluation_and_periods():
    # q(h) = h/2 for even h, (h+1)/2 for odd h  (= ceil(h/2) on integers)
    even = Poly(1, {(1,): Fraction(1, 2)})
    odd = Poly(1, {(1,): Fraction(1, 2), (0,): Fraction(1, 2)})
    qp = QuasiPolynomial(1, (2,), {(0,): even, (1,): odd})
    for h in range(-4, 9):
        assert qp.evaluate((h,)) == (h + h % 2) / 2
    assert qp.total_degree() == 1


def test_quasipolynomial_minimize():
    p = Poly(1, {(0,): Fraction(7)})
    qp = QuasiPolynomial(1, (4,), {(r,): p for r in range(4)})
    m = qp.minimized()
    assert m.periods == (1,)
    assert m.evaluate((13,)) == 7
    assert m == qp


def test_quasipolynomial_equality_across_periods():
    p = Poly(1, {(1,): Fraction(2)})
    a = QuasiPolynomial(1, (1,), {(0,): p})
    b = QuasiPolynomial(1, (2,), {(0,): p, (1,): p})
    assert a == b
    assert hash(a) == hash(b)
