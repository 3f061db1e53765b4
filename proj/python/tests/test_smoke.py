import pytest

import rbh4


def test_envelope_and_classification():
    doc = rbh4.classify(p=3, strategy="backtracking")
    assert list(doc) == ["tool_version", "config", "results"]
    assert doc["tool_version"] == rbh4.__version__
    res = doc["results"]
    assert res["total_rb_count"] == 672
    assert res["orbit_count"] == 15
    assert res["unmatched"] == []


def test_families_and_instantiation():
    fams = rbh4.families()
    assert sum(f["scope"] == "final" for f in fams) == 14
    op = rbh4.instantiate("ma-h", 1, ["0", "5/2"])
    assert rbh4.is_rb(op)
    assert not rbh4.is_rb(rbh4.instantiate("ma-h", 1, ["1", "0"]))
    assert rbh4.is_rb(rbh4.instantiate("final-6", 1), p=5)


def test_errors_raise():
    with pytest.raises(rbh4.Error):
        rbh4.classify(p=3, weight="0")
    with pytest.raises(rbh4.Error):
        rbh4.instantiate("final-1", 1, ["0"])


def test_subalgebra_scope():
    res = rbh4.verify("subalgebras", p=3)["results"]
    assert res["pass"]
    assert res["labels_attained_dim2"] == 5
