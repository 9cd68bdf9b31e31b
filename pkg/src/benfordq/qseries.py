"""Exact truncated Laurent series over Python integers.

A series is stored as a leading exponent ``lead`` (possibly negative), a
tuple of integer coefficients for q^lead, q^(lead+1), ..., and a precision
bound ``prec``: coefficients of q^n for n >= prec are unknown.  All
arithmetic is exact; no floats appear anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

__all__ = [
    "TruncatedLaurentSeries",
    "EtaQuotientSpec",
    "ModularityVerdict",
    "one",
    "series_mul",
    "series_inverse",
    "series_pow",
    "eta_series",
    "eta_quotient_series",
    "eta_quotient_modularity_check",
    "eisenstein_e4",
    "j_invariant",
    "j_e4_cubed",
    "arithmetic_progression_product_inverse",
    "rogers_ramanujan_sum_side",
]


@dataclass(frozen=True)
class TruncatedLaurentSeries:
    lead: int
    coeffs: tuple
    prec: int

    def __post_init__(self):
        if self.lead >= self.prec:
            raise ValueError("precision exhausted")
        if len(self.coeffs) != self.prec - self.lead:
            raise ValueError("coefficient count does not match lead/prec")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n.  Zero below lead; error at or above prec."""
        if n >= self.prec:
            raise ValueError("coefficient index %d beyond precision %d" % (n, self.prec))
        if n < self.lead:
            return 0
        return self.coeffs[n - self.lead]

    def truncate(self, prec: int) -> "TruncatedLaurentSeries":
        if prec > self.prec:
            raise ValueError("cannot raise precision by truncation")
        return TruncatedLaurentSeries(self.lead, self.coeffs[: prec - self.lead], prec)

    def shift(self, d: int) -> "TruncatedLaurentSeries":
        """Multiply by q^d (exact; adjusts lead and prec)."""
        return TruncatedLaurentSeries(self.lead + d, self.coeffs, self.prec + d)

    def __mul__(self, other):
        return series_mul(self, other)

    def __pow__(self, e: int):
        return series_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return (self.lead, self.coeffs, self.prec) == (other.lead, other.coeffs, other.prec)

    def __hash__(self):
        return hash((self.lead, self.coeffs, self.prec))

    def __repr__(self):
        shown = []
        for i, c in enumerate(self.coeffs[:6]):
            if c:
                shown.append("%d*q^%d" % (c, self.lead + i))
        body = " + ".join(shown) if shown else "0"
        return "<series %s + O(q^%d)>" % (body, self.prec)


def one(prec: int) -> TruncatedLaurentSeries:
    """The constant series 1 with the given precision."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    return TruncatedLaurentSeries(0, (1,) + (0,) * (prec - 1), prec)


# -- low-level coefficient arithmetic ---------------------------------------

_KARATSUBA_CUTOFF = 48


def _conv_schoolbook(a, b, n):
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai or i >= n:
            continue
        top = min(len(b), n - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _pack(c, bits):
    x = 0
    for v in reversed(c):
        x = (x << bits) | v
    return gmpy2.mpz(x)


def _conv_kronecker(a, b, n):
    # Kronecker substitution: pack signed sequences as two non-negative
    # parts, multiply as big integers, unpack.  Bit-identical to schoolbook.
    abits = max((v.bit_length() for v in a if v), default=1)
    bbits = max((v.bit_length() for v in b if v), default=1)
    bits = abits + bbits + max(len(a), len(b)).bit_length() + 2
    ap = [v if v > 0 else 0 for v in a]
    an = [-v if v < 0 else 0 for v in a]
    bp = [v if v > 0 else 0 for v in b]
    bn = [-v if v < 0 else 0 for v in b]
    Ap, An, Bp, Bn = (_pack(c, bits) for c in (ap, an, bp, bn))
    pos = Ap * Bp + An * Bn
    neg = Ap * Bn + An * Bp
    mask = (1 << bits) - 1
    out = [0] * n
    for i in range(n):
        out[i] = int(pos & mask) - int(neg & mask)
        pos >>= bits
        neg >>= bits
    return out


def _conv(a, b, n):
    """First n coefficients of the exact convolution of a and b."""
    if min(len(a), len(b), n) < _KARATSUBA_CUTOFF:
        return _conv_schoolbook(a, b, n)
    return _conv_kronecker(a, b, n)


def _inv_coeffs(a, n):
    """Inverse of a power series given by relative coefficients, a[0] = +-1.

    Newton iteration b <- b*(2 - a*b), doubling the correct term count.
    """
    lead = a[0]
    if lead not in (1, -1):
        raise ValueError("non-unit leading coefficient")
    b = [lead]
    k = 1
    while k < n:
        k = min(2 * k, n)
        ab = _conv(a[:k], b, k)
        t = [-x for x in ab]
        t[0] += 2
        b = _conv(b, t, k)
    return b


# -- ring operations --------------------------------------------------------

def series_mul(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    lead = a.lead + b.lead
    prec = min(a.prec + b.lead, b.prec + a.lead)
    if lead >= prec:
        raise ValueError("precision exhausted")
    n = prec - lead
    return TruncatedLaurentSeries(lead, tuple(_conv(a.coeffs, b.coeffs, n)), prec)


def series_inverse(a: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    n = self_len = a.prec - a.lead
    coeffs = _inv_coeffs(list(a.coeffs), n)
    return TruncatedLaurentSeries(-a.lead, tuple(coeffs), -a.lead + self_len)


def series_pow(a: TruncatedLaurentSeries, e: int) -> TruncatedLaurentSeries:
    """a**e with the relative term count of a preserved.

    Binary exponentiation; for negative e the series is inverted first
    (requires unit leading coefficient).
    """
    n = a.prec - a.lead
    if e < 0:
        a = series_inverse(a)
        e = -e
    if e == 0:
        return one(n)
    rel = [1] + [0] * (n - 1)
    base = list(a.coeffs)
    lead = a.lead * e
    k = e
    while k:
        if k & 1:
            rel = _conv(rel, base, n)
        k >>= 1
        if k:
            base = _conv(base, base, n)
    return TruncatedLaurentSeries(lead, tuple(rel), lead + n)


# -- named expansions -------------------------------------------------------

def _eta_coeffs(prec: int, step: int = 1):
    """Coefficients of prod_{n>=1} (1 - q^(step*n)), by the pentagonal
    number theorem (sparse fill)."""
    c = [0] * prec
    c[0] = 1
    k = 1
    while True:
        g1 = step * (k * (3 * k - 1) // 2)
        if g1 >= prec:
            break
        s = -1 if k % 2 else 1
        c[g1] += s
        g2 = step * (k * (3 * k + 1) // 2)
        if g2 < prec:
            c[g2] += s
        k += 1
    return c


def eta_series(prec: int) -> TruncatedLaurentSeries:
    """Product part prod_{n>=1}(1-q^n) of Dedekind's eta; the q^(1/24)
    prefactor is tracked separately by callers."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    return TruncatedLaurentSeries(0, tuple(_eta_coeffs(prec)), prec)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Finite product prod_delta eta(delta*z)^(r_delta)."""

    terms: tuple
    level_hint: int | None = None

    def __post_init__(self):
        terms = tuple((int(d), int(r)) for d, r in self.terms)
        object.__setattr__(self, "terms", terms)
        deltas = [d for d, _ in terms]
        if any(d < 1 for d in deltas):
            raise ValueError("delta must be >= 1")
        if len(set(deltas)) != len(deltas):
            raise ValueError("deltas must be pairwise distinct")
        if any(r == 0 for _, r in terms):
            raise ValueError("r_delta must be nonzero")
        if self.level_hint is not None:
            if self.level_hint < 1:
                raise ValueError("level must be positive")
            for d in deltas:
                if self.level_hint % d:
                    raise ValueError("delta does not divide level")

    @property
    def prefactor_numerator(self) -> int:
        """Sum of delta*r_delta; the q-power prefactor is q^(this/24)."""
        return sum(d * r for d, r in self.terms)


def eta_quotient_series(spec: EtaQuotientSpec, prec: int):
    """Return (offset24, series): the quotient is q^(offset24/24) * series.

    The series collects the product parts prod(1-q^(delta*n))^r only; the
    fractional power lives entirely in offset24.
    """
    if prec < 1:
        raise ValueError("prec must be >= 1")
    acc = one(prec)
    for delta, r in spec.terms:
        factor = TruncatedLaurentSeries(0, tuple(_eta_coeffs(prec, delta)), prec)
        assert factor.coeffs[0] == 1
        acc = series_mul(acc, series_pow(factor, r)).truncate(prec)
    return spec.prefactor_numerator, acc


@dataclass(frozen=True)
class ModularityVerdict:
    weight_times_two: int
    cond_a: bool
    cond_b: bool
    character_s: Fraction


def eta_quotient_modularity_check(spec: EtaQuotientSpec, N: int) -> ModularityVerdict:
    """Exact integer arithmetic for the two mod-24 congruences of the
    eta-quotient modularity criterion on level N."""
    if N < 1:
        raise ValueError("level must be positive")
    for d, _ in spec.terms:
        if N % d:
            raise ValueError("delta does not divide level")
    sum_dr = sum(d * r for d, r in spec.terms)
    sum_ndr = sum((N // d) * r for d, r in spec.terms)
    s = Fraction(1)
    for d, r in spec.terms:
        s *= Fraction(d) ** r
    return ModularityVerdict(
        weight_times_two=sum(r for _, r in spec.terms),
        cond_a=sum_dr % 24 == 0,
        cond_b=sum_ndr % 24 == 0,
        character_s=s,
    )


def eisenstein_e4(prec: int) -> TruncatedLaurentSeries:
    """E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    s3 = [0] * prec
    for d in range(1, prec):
        d3 = d * d * d
        for m in range(d, prec, d):
            s3[m] += d3
    c = [240 * v for v in s3]
    c[0] = 1
    return TruncatedLaurentSeries(0, tuple(c), prec)


def _inv_delta_over_q(n: int):
    """Relative coefficients of 1 / (Delta/q) = 1 / prod(1-q^m)^24."""
    return _inv_coeffs(series_pow(eta_series(n), 24).coeffs, n)


def j_invariant(prec: int) -> TruncatedLaurentSeries:
    """j = E4^3 / Delta, expanded from q^-1 up to (excl.) q^prec."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    n = prec + 1
    e4 = eisenstein_e4(n)
    e4cu = series_pow(e4, 3)
    num = _conv(e4cu.coeffs, _inv_delta_over_q(n), n)
    return TruncatedLaurentSeries(-1, tuple(num), prec)


def j_e4_cubed(prec: int) -> TruncatedLaurentSeries:
    """The weight-12 weakly holomorphic form j * E4^3 = E4^6 / Delta."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    n = prec + 1
    e4cu = series_pow(eisenstein_e4(n), 3)
    e4six = _conv(e4cu.coeffs, e4cu.coeffs, n)
    num = _conv(e4six, _inv_delta_over_q(n), n)
    return TruncatedLaurentSeries(-1, tuple(num), prec)


def _validate_g_delta(g: int, delta: int):
    if delta < 2 or not (0 < g < (delta + 1) // 2):
        raise ValueError("invalid (g, delta)")


def arithmetic_progression_product_inverse(g: int, delta: int, prec: int) -> TruncatedLaurentSeries:
    """Generating series of partitions into parts congruent to +-g mod delta:
    prod_{n ≡ ±g (delta)} 1/(1-q^n)."""
    _validate_g_delta(g, delta)
    if prec < 1:
        raise ValueError("prec must be >= 1")
    den = [0] * prec
    den[0] = 1
    for n in range(1, prec):
        m = n % delta
        if m == g % delta or m == (-g) % delta:
            # multiply by (1 - q^n) in place
            for i in range(prec - 1 - n, -1, -1):
                if den[i]:
                    den[i + n] -= den[i]
    return TruncatedLaurentSeries(0, tuple(_inv_coeffs(den, prec)), prec)


def rogers_ramanujan_sum_side(a: int, prec: int) -> TruncatedLaurentSeries:
    """sum_{n>=0} q^(n^2+an) / (q;q)_n for a in {0, 1}, exactly to prec."""
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    if prec < 1:
        raise ValueError("prec must be >= 1")
    total = [0] * prec
    term = [0] * prec
    term[0] = 1
    total[0] = 1
    n = 1
    while n * n + a * n < prec:
        # term_n = term_{n-1} * q^(2n-1+a) / (1 - q^n)
        shift = 2 * n - 1 + a
        term = [0] * shift + term[: prec - shift]
        for i in range(n, prec):
            term[i] += term[i - n]
        for i, v in enumerate(term):
            total[i] += v
        n += 1
    return TruncatedLaurentSeries(0, tuple(total), prec)
