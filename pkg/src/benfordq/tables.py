"""Recomputation of the three leading-digit frequency tables.

Table 1: B(d, x, 10; p(n)), d = 1..9, x in {100, 1000, 10000}.
Table 2: B(d, x, 2; p(n)), three-bit strings, x up to 5000.
Table 3: B(d, x, 3; j*E4^3 coefficients), two-digit base-3 strings.

The sampling convention that reproduces the published rows is n = 1..x
(FROM_ONE); for table 3 the index n is the exponent of q, so the q^-1
and constant terms are never sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .digits import DigitQuery, leading_string
from .sequences import resolve_sequence
from .udstats import FROM_ONE, benford_target, sample_indices

__all__ = ["TableResult", "round_half_up", "compute_table", "render_table"]

PINNED_CONVENTION = FROM_ONE


@dataclass(frozen=True)
class TableResult:
    which: int
    caption: str
    selector: str
    base: int
    columns: tuple  # digit strings
    x_values: tuple
    cells: tuple  # rows of rounded decimal strings, aligned with columns
    limit_row: tuple  # Benford targets, rounded
    range_convention: str


def round_half_up(value: Fraction, places: int) -> str:
    d = Decimal(value.numerator) / Decimal(value.denominator)
    return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


_SPECS = {
    1: dict(
        selector="p",
        base=10,
        strings=tuple(str(d) for d in range(1, 10)),
        x_values=(100, 1000, 10000),
        places={100: 2, 1000: 3, 10000: 3},
        limit_places=3,
        caption="B(d,x,10;p(n))",
    ),
    2: dict(
        selector="p",
        base=2,
        strings=("100", "101", "110", "111"),
        x_values=(200, 400, 600, 800, 1000, 5000),
        places={x: 3 for x in (200, 400, 600, 800, 1000, 5000)},
        limit_places=3,
        caption="B(d,x,2;p(n))",
    ),
    3: dict(
        selector="jE4cubed",
        base=3,
        strings=("10", "11", "12", "20", "21", "22"),
        x_values=(500, 1000, 1500, 2000),
        places={x: 4 for x in (500, 1000, 1500, 2000)},
        limit_places=4,
        caption="B(d,x,3;j(z)*E4(z)^3)",
    ),
}


def compute_table(which: int) -> TableResult:
    if which not in _SPECS:
        raise KeyError("table must be 1, 2 or 3")
    spec = _SPECS[which]
    seq = resolve_sequence(spec["selector"])
    base = spec["base"]
    length = len(spec["strings"][0])
    xmax = max(spec["x_values"])
    seq.term(max(sample_indices(xmax, PINNED_CONVENTION)))

    counts = {x: {s: 0 for s in spec["strings"]} for x in spec["x_values"]}
    running = {s: 0 for s in spec["strings"]}
    sorted_x = sorted(spec["x_values"])
    xi = 0
    for n in sample_indices(xmax, PINNED_CONVENTION):
        a = seq.term(n)
        if a != 0:
            s = leading_string(a, base, length)
            if s in running:
                running[s] += 1
        if xi < len(sorted_x) and n == sorted_x[xi]:
            counts[sorted_x[xi]] = dict(running)
            xi += 1
    rows = []
    for x in spec["x_values"]:
        places = spec["places"][x]
        rows.append(
            tuple(round_half_up(Fraction(counts[x][s], x), places) for s in spec["strings"])
        )
    limit = tuple(
        round_half_up(
            Fraction(benford_target(DigitQuery.from_string(s, base))).limit_denominator(10**12),
            spec["limit_places"],
        )
        for s in spec["strings"]
    )
    return TableResult(
        which=which,
        caption=spec["caption"],
        selector=spec["selector"],
        base=base,
        columns=spec["strings"],
        x_values=spec["x_values"],
        cells=tuple(rows),
        limit_row=limit,
        range_convention=PINNED_CONVENTION,
    )


def render_table(result: TableResult) -> str:
    width = max(8, max(len(c) for c in result.columns) + 2)
    header = "%-8s" % "x" + "".join("%*s" % (width, "d=" + c) for c in result.columns)
    lines = [result.caption, header]
    for x, row in zip(result.x_values, result.cells):
        lines.append("%-8d" % x + "".join("%*s" % (width, cell) for cell in row))
    lines.append("%-8s" % "inf" + "".join("%*s" % (width, cell) for cell in result.limit_row))
    return "\n".join(lines) + "\n"
