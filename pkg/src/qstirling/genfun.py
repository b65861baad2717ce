"""Exact counting layer on top of the word and tuple enumerations.

Everything here is computed twice in spirit: brute-force sums over
explicit objects on one side, coefficient extraction from truncated
exponential series on the other. All arithmetic is exact (integers and
fractions); whenever a final answer must be an integer polynomial that
is asserted, never obtained by rounding.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from .bijections import enumerate_perm_tuples
from .core import MultisetSpec, qs_polynomial, stats
from .exactpoly import PolyTUV, SeriesT

__all__ = [
    "PolyTUV",
    "SeriesT",
    "eulerian",
    "eulerian_series",
    "qs_polynomial_from_series",
    "descent_series_coefficients",
    "max_descent_count",
    "perm_tuple_polynomial",
    "perm_tuple_polynomial_formula",
]


@lru_cache(maxsize=None)
def eulerian(n):
    """Sum of t^des u^asc over all permutations of 1..n, brute force."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n == 0:
        return PolyTUV.one()
    total = PolyTUV.zero()
    for p in permutations(range(1, n + 1)):
        st = stats(p)
        total = total + PolyTUV.monomial(st.des, st.asc, 0)
    return total


def eulerian_series(order):
    """Truncated exponential series 1 + sum_n eulerian(n) z^n / n!."""
    coeffs = [PolyTUV.one()]
    for k in range(1, order + 1):
        coeffs.append(eulerian(k) * Fraction(1, factorial(k)))
    return SeriesT(coeffs, order)


def _spec_of(m):
    if isinstance(m, MultisetSpec):
        return m
    return MultisetSpec(tuple(m))


def qs_polynomial_from_series(m):
    """The joint (des, asc, plat) polynomial of the quasi-Stirling words
    over m, obtained by coefficient extraction instead of enumeration:

        (n! / (K-n+1)) [z^n] (eulerian_series - 1 + v)^(K-n+1)

    The result provably has integer coefficients; that is asserted.
    Must agree with qs_polynomial(m).
    """
    spec = _spec_of(m)
    n = spec.n
    if n == 0:
        raise ValueError("need at least one value")
    power = spec.K - n + 1
    base = eulerian_series(n) - 1 + PolyTUV.monomial(0, 0, 1)
    coeff = (base ** power).coefficient(n)
    if not isinstance(coeff, PolyTUV):
        coeff = PolyTUV.constant(coeff)
    result = coeff * Fraction(factorial(n), power)
    if not result.is_integral():
        raise AssertionError(
            "coefficient extraction for %s produced non-integers" % (spec.mult,)
        )
    return result


def descent_series_coefficients(m, order):
    """Both sides of the descent series identity, as exact rationals.

    Left: the closed form  m^n C(K-n+m, m) / (K-n+1)  at each power m.
    Right: the t-coefficients of qs_polynomial at u=v=1 convolved with
    the binomial expansion of (1-t)^-(K+1).
    Returns (lhs, rhs), each a list indexed 0..order; they must agree.
    """
    spec = _spec_of(m)
    n = spec.n
    K = spec.K
    lhs = [
        Fraction(j**n * comb(K - n + j, j), K - n + 1) for j in range(order + 1)
    ]
    tcoeffs = qs_polynomial(spec).t_coefficients()
    rhs = []
    for j in range(order + 1):
        total = Fraction(0)
        for d, c in enumerate(tcoeffs):
            if d > j:
                break
            total += c * comb(j - d + K, K)
        rhs.append(total)
    return lhs, rhs


def max_descent_count(m):
    """Closed count (K-n+1)^(n-1) of words over m attaining the maximum
    descent number n; must match brute force."""
    spec = _spec_of(m)
    if spec.n == 0:
        raise ValueError("need at least one value")
    return (spec.K - spec.n + 1) ** (spec.n - 1)


def perm_tuple_polynomial(m, n, anchor=None):
    """Brute-force sum of v^(empty parts) t^(total des) u^(total asc)
    over the tuples from enumerate_perm_tuples(m, n, anchor)."""
    total = PolyTUV.zero()
    for parts in enumerate_perm_tuples(m, n, anchor):
        et = eu = ev = 0
        for part in parts:
            if part:
                st = stats(part)
                et += st.des
                eu += st.asc
            else:
                ev += 1
        total = total + PolyTUV.monomial(et, eu, ev)
    return total


def perm_tuple_polynomial_formula(m, n, anchored=False):
    """Coefficient-extraction form of the tuple polynomial:

        n! [z^n] (eulerian_series - 1 + v)^m

    divided by m when anchored (the m slot choices for the value 1 are
    interchangeable); integrality of the result is asserted.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    base = eulerian_series(n) - 1 + PolyTUV.monomial(0, 0, 1)
    coeff = (base ** m).coefficient(n)
    if not isinstance(coeff, PolyTUV):
        coeff = PolyTUV.constant(coeff)
    scale = Fraction(factorial(n), m) if anchored else factorial(n)
    result = coeff * scale
    if not result.is_integral():
        raise AssertionError(
            "tuple polynomial for m=%d, n=%d produced non-integers" % (m, n)
        )
    return result
