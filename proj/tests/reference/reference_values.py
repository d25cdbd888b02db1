"""Independent reference values (mpmath) frozen into the C++ tests.

Run: python3 reference_values.py
"""
from mpmath import (mp, mpf, fsum, euler, bernoulli, zeta, polylog, digamma, catalan, pi, nsum, inf, quad, log,
                    diff, harmonic)

mp.dps = 50


def H(p, x):
    return harmonic(x) if p == 1 else zeta(p) - zeta(p, x + 1)


def log_sum(q, a, K=2000, J=12):
    """sum_k H_{a k} / k^q. nsum's extrapolation misjudges the logarithmic
    terms, so sum K terms and add the tail of
    H_x ~ ln x + gamma + 1/(2x) - sum_j B_2j / (2j x^2j)
    with power sums from mpmath's Hurwitz zeta and its s-derivative."""
    head = fsum(harmonic(a * k) / mpf(k)**q for k in range(1, K + 1))
    tail = -zeta(q, K + 1, 1) + (log(a) + euler) * zeta(q, K + 1) + zeta(q + 1, K + 1) / (2 * a)
    for j in range(1, J + 1):
        tail -= bernoulli(2 * j) / (2 * j) * a**(-2 * j) * zeta(q + 2 * j, K + 1)
    return head + tail


def A(p, q, n):
    if p == 1:
        return log_sum(q, 1 / mpf(n))
    return nsum(lambda k: H(p, k / mpf(n)) / k**q, [1, inf])


def S(p, q, n):
    if p == 1:
        return log_sum(q, mpf(n))
    return nsum(lambda k: H(p, n * k) / k**q, [1, inf])


def B(p, q, n):
    return nsum(lambda k: (-1)**k * H(p, k / mpf(2 * n)) / k**q, [1, inf])


def T(p, q, n):
    f = lambda x: log(1 - x**n) * log(x)**(p - 1) * polylog(q, x) / x
    return quad(f, [0, mpf(1) / 2, 1])


def show(name, v):
    print(f"{name:28s} {mp.nstr(v, 45)}")


show("zeta(3)", zeta(3))
show("zeta(7)", zeta(7))
show("zeta(2,1/3)", zeta(2, mpf(1) / 3))
show("zeta(4,1/6)", zeta(4, mpf(1) / 6))
show("zeta(5,3/8)", zeta(5, mpf(3) / 8))
show("zeta(13,2/7)", zeta(13, mpf(2) / 7))
show("Li3(1/2)", polylog(3, mpf(1) / 2))
show("Li2(9/10)", polylog(2, mpf(9) / 10))
show("Li4(1-1e-6)", polylog(4, 1 - mpf(10)**-6))
show("Li1(3/4)", polylog(1, mpf(3) / 4))
show("digamma(1/3)", digamma(mpf(1) / 3))
show("digamma(21/2)", digamma(mpf(21) / 2))
show("H(3,5/7)", H(3, mpf(5) / 7))
show("H(1,5/2)", H(1, mpf(5) / 2))
show("catalan", catalan)
show("A(1,2,2)", A(1, 2, 2))
show("A(1,2,1)", A(1, 2, 1))
show("A(1,4,3)", A(1, 4, 3))
show("A(3,4,3)", A(3, 4, 3))
show("A(2,3,2)", A(2, 3, 2))
show("A(5,2,5)", A(5, 2, 5))
show("S(2,3,1)", S(2, 3, 1))
show("S(1,2,3)", S(1, 2, 3))
show("B(1,2,2)", B(1, 2, 2))
show("B(1,4,1)", B(1, 4, 1))
show("B(3,4,3)", B(3, 4, 3))
show("B(5,2,4)", B(5, 2, 4))
show("T(2,2,1)", T(2, 2, 1))
show("T(1,3,2)", T(1, 3, 2))
show("lemma1(2,2)", quad(lambda x: x * polylog(2, x), [0, 1]))
show("lemma1(3,1)", quad(lambda x: polylog(3, x), [0, 1]))
show("lemma2(1,2,2,3)", diff(lambda x: harmonic(3 * x) / x**2, 2, 1))
show("lemma2(2,1,1,2)", diff(lambda x: harmonic(2 * x) / x, 1, 2))
show("lemma2(2,3,3/2,5)", diff(lambda x: harmonic(5 * x) / x**3, mpf(3) / 2, 2))
