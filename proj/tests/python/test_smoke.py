import json
import os

import pytest

import _strata

FIXTURES = os.environ.get("STRATA_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def load_fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def test_signature_validation():
    info = _strata.validate_signature(2, [-2, -2, 6])
    assert info["non_simple_poles"] == 2
    assert info["simple_poles"] == 0
    with pytest.raises(_strata.StrataError):
        _strata.validate_signature(2, [1, 2])  # wrong degree


def test_emptiness_predicate():
    assert _strata.zero_residue_empty(1, [-1, 1])  # exactly one simple pole
    assert _strata.zero_residue_empty(0, [-3, -3, 4])  # zero order too large
    assert not _strata.zero_residue_empty(0, [-2, -2, 1, 1])


def test_parse_kappa():
    assert _strata.parse_kappa("-2,-2,4") == [-2, -2, 4]


def test_class_matches_golden_fixture():
    golden = json.loads(load_fixture("class_g2_golden.json"))
    computed = json.loads(_strata.zr_class(2, [-2, -2, 4]))
    assert computed == golden
    # exact rationals travel as decimal strings
    assert set(computed["lambda"]) == {"num", "den"}


def test_class_text_and_relations():
    c = _strata.zr_class(0, [-2, -2, 1, 1])
    assert "psi" in _strata.class_text(c)
    assert _strata.equals_mod_relations(c, c)


def test_fnef_and_certificate():
    c = _strata.zr_class(0, [-2, -2, 1, 1])
    ok, violations = _strata.is_fnef(c)
    assert ok and violations == []
    cert = json.loads(_strata.nef_certificate([-2, -2, 1, 1]))
    assert cert["d"] == [-2, -2, 1, 1]
    assert cert["status"] in ("fnef-leaf", "boundary-recursion", "memo")


def test_restriction_bookkeeping():
    r = _strata.zr_restriction([-2, -2, 1, 1], [1, 3])
    for side in ("side_S", "side_Sc"):
        piece = r[side]
        if not piece["empty"]:
            assert sum(piece["kappa"]) == -2


def test_chart_residues_and_rank():
    chart = load_fixture("figure1_chart.json")
    form = _strata.residue_form(chart, 1)
    assert sum(form.values()) + sum(_strata.residue_form(chart, 2).values()) == 0
    assert _strata.zero_residue_rank(chart) >= 0


def test_braid_orbits_and_hurwitz():
    parts = [[2, 1]] * 4
    r = _strata.braid_orbits(3, parts)
    assert r["class_count"] == "4"
    assert len(r["orbit_sizes"]) == 1
    assert int(_strata.hurwitz_number(3, parts)) > 0


def test_theorem_hypothesis():
    verdict = _strata.theorem_hypothesis(3, [[2, 1]] * 4, 0)
    assert isinstance(verdict, str) and verdict


def test_twisted_grc():
    cfg = json.dumps(
        {
            "vertices": [
                {"genus": 0, "markings": [1, 2]},
                {"genus": 0, "markings": [3]},
            ],
            "edges": [[0, 1]],
            "marking_order": [[1, -2], [2, 1], [3, 1]],
            "edge_orders": [[-2, 0]],
            "levels": [
                {"vertex": 0, "level": {"num": "-1", "den": "1"}},
                {"vertex": 1, "level": {"num": "0", "den": "1"}},
            ],
        }
    )
    result = _strata.grc_check(cfg)
    assert set(result) >= {"ok", "bad_horizontal_edges", "bad_zeroed_markings"}
