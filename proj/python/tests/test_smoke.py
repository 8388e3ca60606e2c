import pytest

import spinrep


def spin0_labels(report):
    return sorted(s["label"] for s in report["spin0"])


def test_spin_r8():
    r = spinrep.spin("A1", [8])
    assert r["orthogonality"] == "orthogonal"
    assert spin0_labels(r) == ["10w1", "4w1"]
    assert r["coprimary"] is False


def test_g2_vector_module_is_not_coprimary():
    r = spinrep.spin("G2", [1, 0])
    assert spin0_labels(r) == ["0", "w1"]
    assert r["coprimary"] is False


def test_c3_w2_is_coprimary():
    r = spinrep.spin("C3", [0, 1, 0])
    assert spin0_labels(r) == ["w1+w2"]
    assert r["coprimary"] is True
    assert r["scalar"] == 2


def test_non_orthogonal_module_needs_dual():
    with pytest.raises(ValueError):
        spinrep.spin("A2", [1, 0])
    assert spinrep.spin("A2", [1, 0], with_dual=True)["dim_V"] == 6


def test_bad_descriptor():
    with pytest.raises(ValueError):
        spinrep.rootsys("Q3")


def test_budget_refusal():
    with pytest.raises(spinrep.BudgetExceeded):
        spinrep.spin("F4", [1, 1, 1, 1], term_budget=100)


def test_poincare_so7():
    p = spinrep.poincare("B3", [1, 0, 0])
    assert p["factor_degrees"] == [7]


def test_rootsys_f4_numbering():
    r = spinrep.rootsys("F4")
    assert r["weyl_order"] == 1152
    assert r["positive_roots"] == 24


def test_grading_f4_b4():
    g = spinrep.grading("F4/B4")
    assert sorted(int(s["dim"]) for s in g["summands"]) == [44, 84, 128]
    assert g["casimir_value"] == 18
    assert "F4/B4" in spinrep.grading_names()


def test_classify_rank1():
    r = spinrep.classify(1, 8)
    found = sorted(tuple(c["labels"]) for c in r["coprimary"])
    assert found == [(2,), (4,)]


def test_verify_suite():
    assert "conjecture" in spinrep.suite_names()
    r = spinrep.verify("conjecture")
    assert r["failed"] == 0
    assert r["passed"] == len(r["checks"])
