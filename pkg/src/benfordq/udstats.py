"""Leading-digit frequency statistics and equidistribution diagnostics:
the B frequency, Benford targets, chi-square deviation, star discrepancy,
and Weyl exponential sums.
"""

from __future__ import annotations

import cmath
import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .digits import DigitQuery, leading_string, log_frac
from .sequences import IntegerSequence

__all__ = [
    "FROM_ZERO",
    "FROM_ONE",
    "sample_indices",
    "benford_target",
    "benford_b",
    "chi_square",
    "star_discrepancy",
    "weyl_sum",
    "WeylSum",
    "ReportRow",
    "BenfordReport",
    "build_report",
]

FROM_ZERO = "from-zero"
FROM_ONE = "from-one"


def sample_indices(x: int, convention: str) -> range:
    """Indices for 'n <= x': {0..x-1} or {1..x} by convention."""
    if x < 1:
        raise ValueError("x must be >= 1")
    if convention == FROM_ZERO:
        return range(0, x)
    if convention == FROM_ONE:
        return range(1, x + 1)
    raise ValueError("unknown range convention %r" % convention)


def benford_target(q: DigitQuery) -> float:
    """log_k(d+1) - log_k(d) for the query's value d."""
    v = q.value_d
    return math.log(v + 1, q.base) - math.log(v, q.base)


def benford_b(seq: IntegerSequence, q: DigitQuery, x: int, range_convention: str = FROM_ONE) -> Fraction:
    """Exact rational frequency of terms starting with the query string.

    Zero terms and terms with fewer digits than the query never match but
    stay in the denominator x.
    """
    length = len(q.digits)
    target = str(q)
    count = 0
    for n in sample_indices(x, range_convention):
        a = seq.term(n)
        if a == 0:
            continue
        if leading_string(a, q.base, length) == target:
            count += 1
    return Fraction(count, x)


def chi_square(counts, x: int, targets) -> float:
    """Goodness-of-fit sum (count - x*target)^2 / (x*target)."""
    if x < 1:
        raise ValueError("x must be >= 1")
    if any(t <= 0 for t in targets):
        raise ValueError("targets must be positive")
    return sum((c - x * t) ** 2 / (x * t) for c, t in zip(counts, targets, strict=True))


def star_discrepancy(points) -> float:
    """Exact D*_N of a nonempty point set in [0, 1)."""
    pts = sorted(float(p) for p in points)
    if not pts:
        raise ValueError("empty point set")
    if pts[0] < 0 or pts[-1] >= 1:
        raise ValueError("point outside [0,1)")
    N = len(pts)
    return max(max((i + 1) / N - p, p - i / N) for i, p in enumerate(pts))


@dataclass(frozen=True)
class WeylSum:
    m: int
    magnitude: float
    N: int


def weyl_sum(f_values, m: int) -> WeylSum:
    """Magnitude of (1/N) sum_n e^(2 pi i m f(n))."""
    if m == 0:
        raise ValueError("m must be nonzero")
    vals = [float(v) for v in f_values]
    if not vals:
        raise ValueError("empty value list")
    total = sum(cmath.exp(2j * math.pi * m * v) for v in vals)
    return WeylSum(m=m, magnitude=abs(total) / len(vals), N=len(vals))


@dataclass(frozen=True)
class ReportRow:
    string: str
    count: int
    freq: float
    target: float


@dataclass(frozen=True)
class BenfordReport:
    selector: str
    base: int
    string_len: int
    x: int
    range_convention: str
    rows: tuple
    skipped_zero: int
    skipped_short: int
    chi_square: float
    star_discrepancy: float
    weyl: tuple  # of (m, magnitude)

    def to_json_dict(self) -> dict:
        return {
            "selector": self.selector,
            "base": self.base,
            "string_len": self.string_len,
            "x": self.x,
            "range_convention": self.range_convention,
            "rows": [
                {"string": r.string, "count": r.count, "freq": r.freq, "target": r.target}
                for r in self.rows
            ],
            "skipped_zero": self.skipped_zero,
            "skipped_short": self.skipped_short,
            "chi_square": self.chi_square,
            "star_discrepancy": self.star_discrepancy,
            "weyl": [{"m": m, "magnitude": mag} for m, mag in self.weyl],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "BenfordReport":
        return cls(
            selector=d["selector"],
            base=d["base"],
            string_len=d["string_len"],
            x=d["x"],
            range_convention=d["range_convention"],
            rows=tuple(
                ReportRow(r["string"], r["count"], r["freq"], r["target"]) for r in d["rows"]
            ),
            skipped_zero=d["skipped_zero"],
            skipped_short=d["skipped_short"],
            chi_square=d["chi_square"],
            star_discrepancy=d["star_discrepancy"],
            weyl=tuple((w["m"], w["magnitude"]) for w in d["weyl"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["string", "count", "freq", "target"])
        for r in self.rows:
            w.writerow([r.string, r.count, repr(r.freq), repr(r.target)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            "sequence %s, base %d, strings of length %d, x = %d (%s)"
            % (self.selector, self.base, self.string_len, self.x, self.range_convention),
            "%-8s %8s %10s %10s" % ("string", "count", "freq", "target"),
        ]
        for r in self.rows:
            lines.append("%-8s %8d %10.4f %10.4f" % (r.string, r.count, r.freq, r.target))
        lines.append(
            "skipped: %d zero, %d short | chi-square %.6g | D* %.6g"
            % (self.skipped_zero, self.skipped_short, self.chi_square, self.star_discrepancy)
        )
        lines.append(
            "weyl: " + ", ".join("|S(%d)|=%.4g" % (m, mag) for m, mag in self.weyl)
        )
        return "\n".join(lines) + "\n"


def _all_queries(base: int, length: int):
    lo = base ** (length - 1)
    hi = base**length
    for v in range(lo, hi):
        digits = []
        t = v
        for _ in range(length):
            t, d = divmod(t, base)
            digits.append(d)
        yield DigitQuery(base, tuple(reversed(digits)))


def build_report(
    seq: IntegerSequence,
    base: int,
    length: int,
    x: int,
    range_convention: str = FROM_ONE,
    weyl_indices=(1, 2, 3, 4, 5),
) -> BenfordReport:
    """One pass over the sampled terms: leading-string counts for every
    length-digit string, plus log-fractional-part diagnostics."""
    queries = list(_all_queries(base, length))
    counts = {str(q): 0 for q in queries}
    skipped_zero = 0
    skipped_short = 0
    fracs = []
    for n in sample_indices(x, range_convention):
        a = seq.term(n)
        if a == 0:
            skipped_zero += 1
            continue
        s = leading_string(a, base, length)
        if s is None:
            skipped_short += 1
        else:
            counts[s] += 1
        fracs.append(float(log_frac(a, base).value))
    targets = [benford_target(q) for q in queries]
    rows = tuple(
        ReportRow(str(q), counts[str(q)], counts[str(q)] / x, t)
        for q, t in zip(queries, targets)
    )
    return BenfordReport(
        selector=seq.name,
        base=base,
        string_len=length,
        x=x,
        range_convention=range_convention,
        rows=rows,
        skipped_zero=skipped_zero,
        skipped_short=skipped_short,
        chi_square=chi_square([r.count for r in rows], x, targets),
        star_discrepancy=star_discrepancy(fracs) if fracs else 1.0,
        weyl=tuple((m, weyl_sum(fracs, m).magnitude) for m in weyl_indices) if fracs else (),
    )
