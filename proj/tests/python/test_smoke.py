from fractions import Fraction

import pytest

import seacalc


def test_names():
    assert "Ktilde" in seacalc.series_names()
    assert "golden" in seacalc.suite_names()


def test_coefficients():
    assert seacalc.c(1) == Fraction(1, 2)
    assert seacalc.c(2) == Fraction(-1, 8)
    assert seacalc.e(0) == 1
    assert seacalc.e(2) == Fraction(3, 8)
    assert seacalc.f(1, 1) == Fraction(-1, 2)
    assert seacalc.gamma_ratio_half(1, 1) == Fraction(-1, 2)
    assert sum(seacalc.f(l, 5) for l in range(6)) == 1


def test_expand():
    assert seacalc.render("Ktilde", 1, layer="b") == "k - kBs - sBk"
    assert seacalc.expand("P", 0) == {("p", 0): Fraction(1, 2), ("k", 0): Fraction(-1, 2)}
    assert seacalc.expand("X", 1) == {}
    kres = seacalc.expand("KtildeRes", 2)
    assert kres[("kbkbk", 2)] == Fraction(-1, 2)
    assert "\\mathcal{B}" in seacalc.render("PtildeRes", 2, layer="b", format="latex")


def test_expand_errors():
    with pytest.raises(ValueError):
        seacalc.expand("Nope", 1)
    with pytest.raises(ValueError):
        seacalc.expand("X", -1)
    with pytest.raises(ValueError):
        seacalc.expand("X", 2, layer="b", wrapper="checked")


def test_verify_all():
    reports = seacalc.verify("all")
    assert {r["suite"] for r in reports} == set(seacalc.suite_names())
    assert all(r["passed"] for r in reports)


def test_mutation_is_detected():
    reports = seacalc.verify("golden", mutation="flip-c1")
    assert not reports[0]["passed"]


def test_golden_check(tmp_path):
    assert seacalc.golden_check()["passed"]
    bad = tmp_path / "bad.tsv"
    bad.write_text("Ktilde\tkBkBk\t2\n")
    with pytest.raises(ValueError):
        seacalc.golden_check(str(bad))
