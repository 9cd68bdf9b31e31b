"""Exact q-series coefficients and empirical Benford / equidistribution
statistics for partition-type sequences and modular-form expansions."""

__version__ = "0.1.0"
