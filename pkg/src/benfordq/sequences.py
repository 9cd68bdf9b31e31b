"""Named big-integer sequences: p(n), s-regular b_s(n), r_{g,delta}(n),
and coefficient streams of q-expansions, with an enumeration oracle.

Fast paths use sparse pentagonal-number recurrences; the oracle counts
non-increasing part sequences directly from the definition and is kept
independent of all series machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import qseries

__all__ = [
    "IntegerSequence",
    "partition_p",
    "regular_partitions_b",
    "rg_delta",
    "oracle_count",
    "ORACLE_BOUND",
    "sequence_from_series",
    "resolve_sequence",
]

ORACLE_BOUND = 80


# -- pentagonal machinery ----------------------------------------------------

def _pentagonal_pairs(limit: int):
    """(exponent, sign) pairs of prod(1-q^n) with exponent <= limit."""
    out = []
    k = 1
    while k * (3 * k - 1) // 2 <= limit:
        s = -1 if k % 2 else 1
        out.append((k * (3 * k - 1) // 2, s))
        g2 = k * (3 * k + 1) // 2
        if g2 <= limit:
            out.append((g2, s))
        k += 1
    return sorted(out)


_p_cache = [1]


def partition_p(n: int) -> int:
    """Partition number p(n) by Euler's pentagonal recurrence (cached)."""
    if n < 0:
        raise ValueError("negative index")
    if n < len(_p_cache):
        return _p_cache[n]
    pent = _pentagonal_pairs(n)
    for m in range(len(_p_cache), n + 1):
        acc = 0
        for g, s in pent:
            if g > m:
                break
            acc -= s * _p_cache[m - g]
        _p_cache.append(acc)
    return _p_cache[n]


_b_cache: dict = {}


def regular_partitions_b(s: int, n: int) -> int:
    """Number of partitions of n with no part divisible by s.

    Sparse recurrence from prod(1-q^(sn)) = B_s(q) * prod(1-q^n):
    b_s(n) = [q^n] prod(1-q^(sm)) - sum_{g>=1} sign * b_s(n-g) over
    pentagonal exponents g.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if n < 0:
        raise ValueError("negative index")
    cache = _b_cache.setdefault(s, [1])
    if n < len(cache):
        return cache[n]
    pent = _pentagonal_pairs(n)
    pent_s = dict((s * g, sg) for g, sg in _pentagonal_pairs(n // s))
    for m in range(len(cache), n + 1):
        acc = pent_s.get(m, 0)
        for g, sg in pent:
            if g > m:
                break
            acc -= sg * cache[m - g]
        cache.append(acc)
    return cache[n]


_r_cache: dict = {}


def rg_delta(g: int, delta: int, n: int) -> int:
    """Number of partitions of n into parts congruent to +-g (mod delta)."""
    if n < 0:
        raise ValueError("negative index")
    if delta < 2 or not (0 < g < (delta + 1) // 2):
        raise ValueError("invalid (g, delta)")
    key = (g, delta)
    series = _r_cache.get(key)
    if series is None or n >= series.prec:
        prec = max(64, n + 1, 2 * (series.prec if series else 0))
        series = qseries.arithmetic_progression_product_inverse(g, delta, prec)
        _r_cache[key] = series
    return series.coefficient(n)


def oracle_count(part_filter, n: int, max_n: int = ORACLE_BOUND) -> int:
    """Exhaustively count non-increasing sequences of positive parts
    summing to n whose parts all satisfy part_filter (None = no filter).

    Recursion on (remaining, largest allowed part), memoized; independent
    of every generating-function route in this package.
    """
    if n < 0:
        raise ValueError("negative index")
    if n > max_n:
        raise ValueError("oracle bound exceeded")
    pred = part_filter if part_filter is not None else (lambda _p: True)

    @lru_cache(maxsize=None)
    def count(remaining, max_part):
        if remaining == 0:
            return 1
        total = 0
        for part in range(min(remaining, max_part), 0, -1):
            if pred(part):
                total += count(remaining - part, part)
        return total

    return count(n, n) if n else 1


# -- sequence objects --------------------------------------------------------

@dataclass
class IntegerSequence:
    """Deterministic big-integer sequence with on-demand cached terms.

    ``compute(upto)`` returns the exact terms for indices
    first_index..upto; None marks a fixed-range sequence whose cache is
    all there is.
    """

    name: str
    first_index: int = 0
    compute: object = None
    _terms: list = field(default_factory=list)

    def term(self, n: int) -> int:
        i = n - self.first_index
        if i < 0:
            raise ValueError("index %d below first index %d" % (n, self.first_index))
        if i >= len(self._terms):
            if self.compute is None:
                raise ValueError("range exceeds precision")
            self._terms = list(self.compute(max(n, self.first_index + 2 * len(self._terms))))
        return self._terms[i]

    def terms(self, lo: int, hi: int) -> list:
        """Terms for indices lo..hi inclusive."""
        self.term(hi)
        return self._terms[lo - self.first_index : hi - self.first_index + 1]


def sequence_from_series(series: qseries.TruncatedLaurentSeries, name: str) -> IntegerSequence:
    """Wrap a series as a fixed-range sequence: term(n) = [q^n] series."""
    return IntegerSequence(name=name, first_index=series.lead, _terms=list(series.coeffs))


# -- selector registry -------------------------------------------------------

def _parse_eta_spec(text: str) -> qseries.EtaQuotientSpec:
    """Parse 'delta:r[,delta:r...]' into an EtaQuotientSpec."""
    terms = []
    if text:
        for chunk in text.split(","):
            d, _, r = chunk.partition(":")
            terms.append((int(d), int(r)))
    return qseries.EtaQuotientSpec(tuple(terms))


def resolve_sequence(selector: str) -> IntegerSequence:
    """Resolve a CLI/service selector to a sequence.

    Registered forms: p | b_s:<s> | r:<g>,<delta> | jE4cubed |
    rr_sum:<a> | eta_quotient:<delta>:<r>[,...]
    """
    try:
        if selector == "p":
            return IntegerSequence("p", 0, lambda u: [partition_p(n) for n in range(u + 1)])
        if selector.startswith("b_s:"):
            s = int(selector[4:])
            if s < 2:
                raise ValueError("s must be >= 2")
            return IntegerSequence(
                selector, 0, lambda u: [regular_partitions_b(s, n) for n in range(u + 1)]
            )
        if selector.startswith("r:"):
            g, delta = (int(v) for v in selector[2:].split(","))
            if delta < 2 or not (0 < g < (delta + 1) // 2):
                raise ValueError("invalid (g, delta)")
            return IntegerSequence(
                selector, 0, lambda u: [rg_delta(g, delta, n) for n in range(u + 1)]
            )
        if selector == "jE4cubed":
            return IntegerSequence(
                selector, -1, lambda u: qseries.j_e4_cubed(max(u, 0) + 1).coeffs
            )
        if selector.startswith("rr_sum:"):
            a = int(selector[7:])
            if a not in (0, 1):
                raise ValueError("a must be 0 or 1")
            return IntegerSequence(
                selector, 0, lambda u: qseries.rogers_ramanujan_sum_side(a, u + 1).coeffs
            )
        if selector.startswith("eta_quotient:"):
            spec = _parse_eta_spec(selector[len("eta_quotient:"):])

            def compute(u, spec=spec):
                _off, ser = qseries.eta_quotient_series(spec, u + 1)
                return ser.coeffs

            return IntegerSequence(selector, 0, compute)
    except ValueError as exc:
        raise KeyError("bad selector %r: %s" % (selector, exc)) from exc
    raise KeyError("unknown selector %r" % selector)
