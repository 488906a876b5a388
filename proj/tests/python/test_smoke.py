import json
import os
from math import comb
from pathlib import Path

import pytest

import zinbiel

DATA = Path(os.environ.get("ZINBIEL_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
R1 = "(alphabet x y z)\n(family R1)\n"


def test_reduce_left_nested_product():
    assert zinbiel.reduce(R1, "(x (y z))") == "(+ ((x y) z) ((y x) z))"


def test_reduce_respects_bound():
    with pytest.raises(zinbiel.BoundExceeded):
        zinbiel.reduce(R1, "(x (y z))", bound=2)


def test_parse_errors_are_value_errors():
    with pytest.raises(zinbiel.ParseError):
        zinbiel.reduce(R1, "(x (y")
    with pytest.raises(ValueError):
        zinbiel.reduce(R1, "(x (y w))")


def test_free_zinbiel_dimensions_are_powers_of_d():
    counts = zinbiel.irreducible_counts("(family R1)", 5, letters=2)
    assert counts == [2 ** n for n in range(1, 6)]


def test_irreducible_words_are_left_combs():
    words = zinbiel.irreducible_words("(alphabet x y)\n(family R1)", 3)
    assert len(words) == 8
    assert "((x y) x)" in words
    assert all(not w.startswith("(x (") for w in words)


def test_thm1_counts_match_closed_form():
    report = zinbiel.verify_thm1(2, 5)
    assert report["passed"] and report["failures"] == 0
    assert report["counts"] == [2, 1, 2, 1, 2]
    assert report["counts"] == [comb(2, 2) ** (n // 2) * 2 ** (n % 2) for n in range(1, 6)]


def test_thm2_and_gsb_verification():
    assert zinbiel.verify_thm2(2, 4)["verified"]
    plain = (DATA / "trivial2.sexp").read_text()
    assert zinbiel.verify_gsb(plain, 4)["failures"] > 0
    completed = zinbiel.complete(plain, 5)
    assert "(alphabet x y)" in completed
    assert zinbiel.verify_gsb(completed, 5)["verified"]
    assert zinbiel.irreducible_counts(completed, 5) == [2, 1, 2, 1, 2]


def test_zinbiel_product_and_star():
    assert zinbiel.zinbiel_product("[x]", "[y z]") == "(+ [y x z] [x y z])"
    assert zinbiel.star("[x]", "[y]") == zinbiel.star("[y]", "[x]")
    assert zinbiel.zinbiel_product("[x]", "[y]", letters=["y", "x"]) == "[x y]"


def test_corollary_count():
    assert [zinbiel.corollary_count(3, n) for n in range(1, 5)] == [3, 3, 9, 9]


def test_embed_truncated_polynomial():
    report = zinbiel.embed((DATA / "truncpoly3.json").read_text(), 4)
    assert report["verified"] and report["residues"] == 0 and report["certified_to"] == 4


def test_embed_rejects_bad_json():
    with pytest.raises(zinbiel.ParseError):
        zinbiel.embed("{", 4)


def test_run_cli_matches_library(tmp_path):
    report = tmp_path / "r.json"
    code, out, err = zinbiel.run_cli(
        ["verify", "thm1", "--letters", "2", "--bound", "4", "--report", str(report)])
    assert code == 0 and err == ""
    assert json.loads(report.read_text())["status"] == "ok"
    assert zinbiel.run_cli(["reduce", "--relations", "/nonexistent", "--input", "x"])[0] == 2
