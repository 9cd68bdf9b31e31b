from fractions import Fraction

import pytest

from benfordq.tables import compute_table, render_table, round_half_up


@pytest.fixture(scope="module")
def tables():
    return {w: compute_table(w) for w in (1, 2, 3)}


class TestRounding:
    def test_half_up(self):
        assert round_half_up(Fraction(1, 8), 2) == "0.13"
        assert round_half_up(Fraction(83, 400), 3) == "0.208"

    def test_trailing_zeros_kept(self):
        assert round_half_up(Fraction(3, 10), 3) == "0.300"


class TestTable1:
    def test_shape(self, tables):
        t = tables[1]
        assert t.columns == tuple(str(d) for d in range(1, 10))
        assert t.x_values == (100, 1000, 10000)

    def test_known_cells(self, tables):
        t = tables[1]
        cell = dict(zip(t.columns, t.cells[t.x_values.index(1000)]))
        assert cell["2"] == "0.177"
        assert cell["1"] == "0.305"

    def test_limit_row(self, tables):
        assert tables[1].limit_row[0] == "0.301"


class TestTable2:
    def test_shape(self, tables):
        t = tables[2]
        assert t.columns == ("100", "101", "110", "111")
        assert len(t.cells) == 6

    def test_known_cell(self, tables):
        t = tables[2]
        cell = dict(zip(t.columns, t.cells[t.x_values.index(5000)]))
        assert cell["111"] == "0.194"


class TestTable3:
    def test_shape(self, tables):
        t = tables[3]
        assert t.columns == ("10", "11", "12", "20", "21", "22")
        assert t.x_values == (500, 1000, 1500, 2000)

    def test_known_cell(self, tables):
        t = tables[3]
        cell = dict(zip(t.columns, t.cells[t.x_values.index(1500)]))
        assert cell["22"] == "0.1067"


class TestRender:
    def test_byte_stable(self, tables):
        assert render_table(tables[1]) == render_table(compute_table(1))

    def test_structure(self, tables):
        lines = render_table(tables[2]).strip().split("\n")
        # caption + header + six x rows + limit row
        assert len(lines) == 9
        assert lines[-1].startswith("inf")

    def test_unknown_table(self):
        with pytest.raises(KeyError):
            compute_table(4)
