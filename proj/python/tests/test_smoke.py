import json
import os
from math import comb
from pathlib import Path

import pytest

import saff

DATA = Path(os.environ.get("SAFF_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def weights(multiset):
    return {tuple(s["lambda"]): s["mult"] for s in multiset["summands"]}


def test_dimensions_match_binomials():
    for n in range(2, 6):
        for k in range(0, 5):
            assert saff.weyl_dim(n, [k]) == comb(n + k - 1, k)
        for k in range(1, n):
            assert saff.weyl_dim(n, [1] * k) == comb(n, k)


def test_normalize_and_dual():
    assert saff.normalize(3, [3, 2, 1]) == [2, 1, 0]
    assert saff.dual(4, [3, 1, 0, 0]) == [3, 3, 2, 0]
    assert saff.dual(4, saff.dual(4, [5, 2, 2, 0])) == [5, 2, 2, 0]


def test_tensor_of_standard_with_itself():
    out = weights(saff.tensor(3, [[1, 0, 0]], [[1, 0, 0]]))
    assert out == {(2, 0, 0): 1, (1, 1, 0): 1}
    # C^n ⊗ (C^n)^∨ = sl_n ⊕ C
    out = weights(saff.tensor(3, [[1, 0, 0]], [[1, 1, 0]]))
    assert out == {(2, 1, 0): 1, (0, 0, 0): 1}


def test_pieri():
    assert weights(saff.pieri(3, [3, 0, 0], 1)) == {(4, 0, 0): 1, (3, 1, 0): 1}


def test_bad_weight_raises_value_error():
    with pytest.raises(ValueError):
        saff.normalize(3, [1, 2, 0])


def test_classify():
    assert saff.classify(load("sym3_n3.json"))["verdict"] == "Good"
    bad = saff.classify(load("wedge2_n10.json"), seed=5)
    assert bad["verdict"] == "Bad"
    assert bad["seed"] == 5


def test_filtration_of_canonical_model():
    rep = saff.model("sym-dual", 2, l=2)
    report = saff.filtrate(rep, "socle")
    assert report["length"] == 3
    assert all(report["checks"].values())
    assert saff.dual_model(saff.dual_model(rep)) == rep


def test_reference_model_layers_differ():
    rep = saff.model("dual-standard-quadric", 3)
    socle = saff.filtrate(rep, "socle")
    radical = saff.filtrate(rep, "radical")
    assert socle["layers"] != radical["layers"]


def test_check2step_outcomes():
    assert saff.check2step(load("ext_b.json"))["outcome"] == "RationalByB"
    assert saff.check2step(load("ext_a.json"))["outcome"] == "RationalByA"
    assert saff.check2step(load("ext_exceptional.json"))["outcome"] == "Exceptional"
    assert saff.check2step(load("ext_r1.json"))["outcome"] == "PossiblyNotGenericallyFree"
    with pytest.raises(saff.ValidationError):
        saff.check2step(load("ext_bad_structure.json"))


def test_enumerate_small_cap():
    entries, summary = saff.enumerate_candidates(3, max_dim_s=14)
    assert entries
    assert all(int(e["dim_S"]) <= 14 for e in entries)
    assert f"# entries {len(entries)}" in summary
    with pytest.raises(saff.ResourceLimitError):
        saff.enumerate_candidates(3, max_dim_s=15)


def test_stable_level():
    assert saff.stable_level(3) == {"SL": 8, "SAff": 11}


def test_selftest_subset():
    results = saff.selftest([1, 2])
    assert [r[0] for r in results] == [1, 2]
    assert all(r[1] for r in results)
