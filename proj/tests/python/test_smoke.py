import json

import pytest

import borelss


def test_both_even_z2():
    doc = borelss.classify("z2", 2, 0, 0)
    assert doc["verdict"] == "free-action-possible"
    (outcome,) = doc["outcomes"]
    assert outcome["presentation"]["relations"] == ["z^2", "x^3*z", "x^7"]
    assert outcome["index"]["cohomology_index"] == 6
    assert doc["inputs"]["a"] == 0


def test_odd_even_z2_has_no_outcome():
    doc = borelss.classify("z2", 3, 1, 0, show_rejected=True)
    assert doc["verdict"] == "no-free-action"
    assert doc["outcomes"] == []
    assert all(branch["reason"] for branch in doc["rejected"])


def test_parities_accepted_as_words():
    doc = borelss.classify("s1", 3, "even", "odd")
    assert len(doc["outcomes"]) == 2
    assert doc["inputs"]["a_parity"] == "even"


def test_table_has_eight_rows():
    table = borelss.table(2)
    assert len(table["rows"]) == 8
    row = next(r for r in table["rows"] if (r["group"], r["a_parity"], r["b_parity"]) == ("z2", "even", "even"))
    assert row["candidate_indices"] == [6]


def test_index():
    result = borelss.index(4, 0, 0)
    assert result["candidate_indices"] == [12]
    assert result["no_equivariant_map_above"] == 12


def test_oracle_check():
    result = borelss.oracle_check("z2", 1, 0, 0)
    assert result["match"]
    assert result["engine_outcomes"] == result["oracle_outcomes"] == 1


def test_fiber_ring_input():
    fiber = {
        "basis": [{"name": "1", "degree": 0}, {"name": "u", "degree": 1}],
        "unit": "1",
        "products": [],
        "top_degree": 1,
    }
    doc = borelss.classify_fiber(fiber, "z2")
    assert len(doc["outcomes"]) == 1


def test_errors():
    with pytest.raises(ValueError):
        borelss.classify("z3", 1, 0, 0)
    with pytest.raises(ValueError):
        borelss.classify("z2", 0, 0, 0)
    with pytest.raises(ValueError):
        borelss.classify("z2", 1, "maybe", 0)
    with pytest.raises(RuntimeError):
        borelss.oracle_check("z2", 40, 0, 0, cap=2000)


def test_run_cli_is_deterministic():
    args = ("classify", "--group", "z2", "--n", "2", "--a", "0", "--b", "1", "--format", "json")
    code, out, err = borelss.run_cli(*args)
    assert code == 0 and err == ""
    assert borelss.run_cli(*args)[1] == out
    assert json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n" == out
