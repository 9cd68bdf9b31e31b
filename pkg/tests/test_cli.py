import json

import pytest
from click.testing import CliRunner

from benfordq.cli import main


@pytest.fixture
def runner():
    return CliRunner()


class TestCompute:
    def test_pretty(self, runner):
        res = runner.invoke(main, ["compute", "p", "4"])
        assert res.exit_code == 0
        assert res.output == "0 1\n1 1\n2 2\n3 3\n4 5\n"

    def test_csv(self, runner):
        res = runner.invoke(main, ["compute", "p", "2", "--format", "csv"])
        assert res.exit_code == 0
        assert res.output == "n,value\n0,1\n1,1\n2,2\n"

    def test_unknown_selector_is_usage_error(self, runner):
        res = runner.invoke(main, ["compute", "nope", "4"])
        assert res.exit_code == 2

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "terms.txt"
        res = runner.invoke(main, ["compute", "b_s:2", "5", "--out", str(out)])
        assert res.exit_code == 0
        assert out.read_text().splitlines()[-1] == "5 3"


class TestTable:
    def test_byte_stable(self, runner):
        a = runner.invoke(main, ["table", "1"])
        b = runner.invoke(main, ["table", "1"])
        assert a.exit_code == 0 and a.output == b.output
        assert "0.305" in a.output

    def test_range_enforced(self, runner):
        res = runner.invoke(main, ["table", "7"])
        assert res.exit_code == 2


class TestReport:
    def test_json_to_file(self, runner, tmp_path):
        out = tmp_path / "rep.json"
        res = runner.invoke(
            main,
            ["report", "--seq", "p", "--len", "1", "--x", "100", "--format", "json", "--out", str(out)],
        )
        assert res.exit_code == 0
        body = json.loads(out.read_text())
        rows = {r["string"]: r for r in body["reports"][0]["rows"]}
        assert rows["1"]["count"] == 33

    def test_csv(self, runner):
        res = runner.invoke(
            main,
            ["report", "--seq", "p", "--base", "2", "--string", "100", "--x", "200", "--format", "csv"],
        )
        assert res.exit_code == 0
        assert res.output.splitlines()[0] == "string,count,freq,target"

    def test_bad_x_list(self, runner):
        res = runner.invoke(main, ["report", "--seq", "p", "--len", "1", "--x", "10,abc"])
        assert res.exit_code == 2

    def test_both_string_and_len(self, runner):
        res = runner.invoke(
            main,
            ["report", "--seq", "p", "--string", "1", "--len", "1", "--x", "100"],
        )
        assert res.exit_code == 2
