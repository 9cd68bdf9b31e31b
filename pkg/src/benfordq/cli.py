"""Command-line client for the benfordq service.

Talks HTTP to a running server when --server (or BENFORDQ_SERVER) is
given; otherwise mounts the service in-process over an ASGI transport,
so every code path goes through the same API surface.

Exit codes: 0 success, 1 runtime/I-O error, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile

import click
import httpx

from .udstats import BenfordReport


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    # TestClient is an httpx.Client that drives the ASGI app in-process
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(ctx, path, payload):
    try:
        resp = ctx.obj.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise click.ClickException("request failed: %s" % exc)
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", resp.text)
        raise click.UsageError(str(detail))
    if resp.status_code != 200:
        raise click.ClickException("server error %d: %s" % (resp.status_code, resp.text))
    return resp.json()


def _write_out(text: str, out: str | None):
    if out is None:
        click.echo(text, nl=False)
        return
    # atomic: temp file in the target directory, then rename
    d = os.path.dirname(os.path.abspath(out))
    try:
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".benfordq-")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except OSError as exc:
        raise click.ClickException("cannot write %s: %s" % (out, exc))


@click.group()
@click.option("--server", envvar="BENFORDQ_SERVER", default=None, help="URL of a running benfordq server; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Exact q-series coefficients and Benford / equidistribution reports."""
    ctx.obj = _client(server)


@main.command()
@click.argument("selector")
@click.argument("n_max", type=int)
@click.option("--format", "fmt", type=click.Choice(["csv", "pretty"]), default="pretty")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def compute(ctx, selector, n_max, fmt, out):
    """Print exact terms (n, a(n)) of a registered sequence up to N_MAX."""
    data = _post(ctx, "/compute", {"selector": selector, "n_max": n_max})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for row in data["terms"]:
            w.writerow([row["n"], row["value"]])
        _write_out(buf.getvalue(), out)
    else:
        _write_out("".join("%d %s\n" % (r["n"], r["value"]) for r in data["terms"]), out)


@main.command()
@click.argument("which", type=click.IntRange(1, 3))
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def table(ctx, which, out):
    """Recompute leading-digit frequency table 1, 2 or 3."""
    data = _post(ctx, "/table", {"which": which})
    _write_out(data["rendered"], out)


@main.command()
@click.option("--seq", "selector", required=True)
@click.option("--base", type=int, default=10, show_default=True)
@click.option("--string", "digit_string", default=None, help="Explicit digit string (sets the length).")
@click.option("--len", "length", type=int, default=None, help="Digit-string length to tabulate.")
@click.option("--x", "x_values", required=True, help="Comma-separated ascending sample bounds.")
@click.option("--range", "range_convention", type=click.Choice(["from-zero", "from-one"]), default="from-one", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "pretty"]), default="pretty")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def report(ctx, selector, base, digit_string, length, x_values, range_convention, fmt, out):
    """Full Benford report: frequencies, targets, chi-square, star
    discrepancy and Weyl sum magnitudes for m = 1..5."""
    try:
        xs = [int(v) for v in x_values.split(",")]
    except ValueError:
        raise click.UsageError("--x expects comma-separated integers")
    payload = {
        "selector": selector,
        "base": base,
        "digit_string": digit_string,
        "length": length,
        "x_values": xs,
        "range_convention": range_convention,
    }
    data = _post(ctx, "/report", payload)
    reports = [BenfordReport.from_json_dict(d) for d in data["reports"]]
    if fmt == "json":
        text = json.dumps(data, indent=2) + "\n"
    elif fmt == "csv":
        text = "".join(r.to_csv() for r in reports)
    else:
        text = "\n".join(r.to_text() for r in reports)
    _write_out(text, out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the benfordq HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
