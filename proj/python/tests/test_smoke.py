import pytest

import hermorb


def test_version():
    assert hermorb.__version__ == "0.1.0"


def test_pairs_header_and_m():
    rep = hermorb.pairs("B", 4)
    assert rep["header"]["version"] == "0.1.0"
    assert rep["header"]["parameters"] == {"type": "B", "rank": 4}
    assert rep["ok"] is True
    assert [p["m"] for p in rep["data"]["pairs"]] == [2]


def test_orbits_checks_pass():
    rep = hermorb.orbits("A:3:p=2", max_params=2)
    assert rep["ok"] is True
    cases = {o["case"] for o in rep["data"]["orbits"]}
    assert {"1.1", "1.2", "1.3", "1.6", "1.7"} <= cases


def test_case_14_generators():
    rep = hermorb.semigroup("1.4", max_degree=3, p=5)
    gens = {(g["n1"], g["n2"], tuple(g["E"])) for g in rep["data"]["generators"]}
    assert gens == {
        (1, 0, (1, 0, 0, 0, 0)),
        (0, 1, (0, 1, 0, 0, 0)),
        (1, 1, (0, 0, 1, 0, 0)),
        (2, 0, (0, 0, 0, 1, 0)),
        (0, 2, (0, 0, 0, 0, 1)),
    }


def test_sigma_order_and_minuscule():
    assert hermorb.leq_sigma("1.4", [0, 0, 1, 0, 0], [1, 1, 0, 0, 0], p=5)
    assert not hermorb.is_minuscule("1.4", [1, 1, 0, 0, 0], p=5)
    assert hermorb.is_minuscule("1.4", [1, 0, 0, 0, 0], p=5)


def test_normality_all():
    assert hermorb.normality("all", max_rank=6)["ok"] is True


def test_tensor_products():
    assert hermorb.in_tensor_semigroup(1, 1, 2)
    assert not hermorb.in_tensor_semigroup(1, 1, 1)
    assert not hermorb.product_contains((2, 2, 2), (1, 1, 2), (1, 1, 2))
    assert hermorb.gamma_module((1, 1, 2)) == [[1, 1, 2], [1, 1, 0]]
    ok, missing = hermorb.verify_gamma_product((1, 1, 2), (1, 1, 2))
    assert ok and missing == []
    assert hermorb.cg_verify(2)["ok"] is True


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        hermorb.pairs("E", 6)
    with pytest.raises(ValueError):
        hermorb.semigroup("9.9")
