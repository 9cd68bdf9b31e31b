"""Independent brute-force oracles shared by the test modules.

Everything here is deliberately naive: schoolbook polynomial products,
direct enumeration, convergent series.  Nothing imports the fast paths
it is used to check.
"""

from mpmath import mp, mpf, workdps


def poly_mul(a, b, prec):
    """Schoolbook product of coefficient lists, truncated to prec."""
    out = [0] * prec
    for i, ai in enumerate(a[:prec]):
        if ai:
            for j, bj in enumerate(b[: prec - i]):
                out[i + j] += ai * bj
    return out


def euler_product(prec, exponent_filter=None):
    """Coefficients of prod (1 - q^n) over n >= 1 with n < prec, optionally
    restricted to n satisfying exponent_filter, by direct expansion."""
    c = [0] * prec
    c[0] = 1
    for n in range(1, prec):
        if exponent_filter is not None and not exponent_filter(n):
            continue
        c = poly_mul(c, [1] + [0] * (n - 1) + [-1], prec)
    return c


def bessel_i_series(alpha, x, terms=None, dps=250):
    """Convergent power series I_alpha(x) = sum (x/2)^(2k+alpha) / (k! Gamma(k+alpha+1)).

    The series terms peak near k ~ x/2, so the term count scales with x;
    dps=250 resolves relative errors down to ~1e-240."""
    if terms is None:
        terms = 2 * int(x) + 200
    with workdps(dps):
        x = mpf(x)
        a = mpf(alpha)
        total = mpf(0)
        for k in range(terms):
            total += (x / 2) ** (2 * k + a) / (mp.factorial(k) * mp.gamma(k + a + 1))
        return total
