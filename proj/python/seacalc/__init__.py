"""Exact expansions of the fixed-mass operator series."""

import json
from fractions import Fraction
from importlib import resources

from . import _seacalc
from ._seacalc import GoldenParseError, series_names, suite_names

__all__ = [
    "GoldenParseError",
    "c",
    "default_golden_path",
    "e",
    "expand",
    "f",
    "gamma_ratio_half",
    "golden_check",
    "render",
    "series_names",
    "suite_names",
    "verify",
]


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def default_golden_path():
    return str(resources.files(__package__) / "data" / "leading_orders.tsv")


def render(series, order, layer="pk", wrapper="plain", format="text"):
    return _seacalc.render(series, order, layer, wrapper, format).rstrip("\n")


def expand(series, order, layer="pk", wrapper="plain"):
    """Returns {(word, pi_exponent): Fraction}."""
    doc = json.loads(_seacalc.render(series, order, layer, wrapper, "json"))
    return {
        (t["word"], t["pi_exponent"]): Fraction(int(t["num"]), int(t["den"]))
        for t in doc["terms"]
    }


def verify(suite="all", order_pk=6, order_b=5, golden_path=None, mutation="none"):
    path = golden_path or default_golden_path()
    return json.loads(_seacalc.verify(suite, order_pk, order_b, path, mutation))


def golden_check(path=None, order=3):
    report = json.loads(_seacalc.golden_check(path or default_golden_path(), order))
    return report[0]


def c(n):
    return _fraction(_seacalc.c(n))


def e(n):
    return _fraction(_seacalc.e(n))


def f(l, r):
    return _fraction(_seacalc.f(l, r))


def gamma_ratio_half(r, rho):
    return _fraction(_seacalc.gamma_ratio_half(r, rho))
