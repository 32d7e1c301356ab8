"""Smoke tests for the Python extension module."""

import pytest

import simkern


@pytest.fixture(scope="module")
def example5x5():
    return simkern.generate("example5x5")["matrix"]


def test_matrix_handle(example5x5):
    assert example5x5.rows == 5
    assert example5x5.cols == 5
    assert example5x5.domain == "gaussian-rational"
    assert "5x5" in repr(example5x5)


def test_json_round_trip(example5x5):
    payload = example5x5.to_json()
    assert payload["domain"] == "gaussian-rational"
    assert payload["entries"][0][3] == {"re": "0", "im": "-2"}
    again = simkern.Matrix.from_json(payload)
    assert again == example5x5


def test_csv_and_dict_construction():
    m = simkern.Matrix.from_json("2,1\n1,2\n")
    assert m.domain == "rational"
    assert simkern.pmp_order(m) == 2
    d = simkern.Matrix.from_json(
        {"n": 2, "domain": "rational", "entries": [["0", "1"], ["1", "0"]]}
    )
    assert simkern.signature(d) == (1, 0, 1)


def test_worked_example_partitions(example5x5):
    assert simkern.pi_min(example5x5, "trivial") == [[1, 2, 5], [3], [4]]
    assert simkern.pi_min(example5x5, "roots:4") == [[1, 2, 4, 5], [3]]
    assert simkern.pi_min(example5x5, "circle") == [[1, 2, 4, 5], [3]]
    assert simkern.pi_stratum(example5x5, "circle") == [[1, 2, 4, 5], [3]]


def test_pmp_and_signature(example5x5):
    assert simkern.pmp_order(example5x5) == 5
    assert simkern.signature(example5x5) == (2, 3, 0)
    assert simkern.rank(example5x5) == 2
    verdict = simkern.is_k_pmp(example5x5, 3)
    assert verdict["holds"] is True and verdict["witness"] is None

    bad = simkern.generate("hns-fail-3x3")["matrix"]
    verdict = simkern.is_k_pmp(bad, 3)
    assert verdict["holds"] is False
    assert verdict["witness"] == [1, 2, 3]
    assert simkern.principal_minor(bad, [1, 2, 3]) == {"re": "-4", "im": "0"}


def test_kernels(example5x5):
    kernel = simkern.simultaneous_kernel(example5x5)
    assert kernel["dim"] == 2 and kernel["ambient"] == 5
    block_ones = simkern.ker_block_ones(5, [[1, 2, 5], [3], [4]])
    assert block_ones["dim"] == 2
    combo = simkern.positive_combination_kernel(example5x5, ["1", "1/2", 3, "2", "7/3"])
    assert combo["dim"] == 2
    report = simkern.verify_t3pmp(example5x5)
    assert report["all_equal"] is True and report["is_3pmp"] is True


def test_stratum_report(example5x5):
    report = simkern.stratum_report(example5x5, "trivial")
    assert report["partition"]["blocks"] == [[1, 2, 5], [3], [4]]
    assert report["rank_C"] == 2 and report["rank_A"] == 2
    assert report["flags"]["psd_input"] is True
    c = report["C"]["entries"]
    assert c[0][2] == {"re": "0", "im": "-2"}
    m = simkern.compression(example5x5, [[1, 2, 5], [3], [4]])
    assert m.rows == 3


def test_hns():
    gen = simkern.generate("random-hns", {"n": "6"}, seed=11)
    assert gen["certificate"]["all_passed"] is True
    dec = simkern.hns_decompose(gen["matrix"])
    assert dec["certified_psd"] is True
    assert sum(b["size"] for b in dec["blocks"]) == 6
    with pytest.raises(simkern.Error):
        simkern.hns_decompose(simkern.generate("hns-fail-3x3")["matrix"])


def test_toeplitz_counterexample():
    t8 = simkern.generate("toeplitz", {"n": "8"})["matrix"]
    report = simkern.verify_t3pmp(t8)
    assert report["is_3pmp"] is False
    assert report["all_equal"] is False
    assert report["dims"][3] == 0  # ker J_pi is trivial
    assert report["dims"][0] >= 1


def test_rectangular_and_gf():
    m = simkern.Matrix.from_json(
        {"rows": 1, "cols": 3, "domain": "gf", "p": 5, "entries": [[1, 1, 2]]}
    )
    out = simkern.rectangular_simultaneous_kernel(m)
    assert out["column_partition"] == [[1, 2], [3]]
    assert out["kernel"]["dim"] == 1
    dd = simkern.distinct_diagonal_check(
        simkern.Matrix.from_json({"n": 2, "domain": "rational", "entries": [[1, 2], [3, 4]]})
    )
    assert dd["hypothesis_holds"] is True and dd["kernel"]["dim"] == 0


def test_generators_and_epsilon():
    gap = simkern.generate("psrp-gap", {"n": "5", "l": "3", "k": "2"})
    assert gap["certificate"]["all_passed"] is True
    assert gap["epsilon"] is not None
    sig = simkern.generate(
        "signature", {"n": "4", "k": "2", "n_plus": "2", "n_minus": "1"}
    )
    assert simkern.signature(sig["matrix"]) == (2, 1, 1)
    with pytest.raises(simkern.Error):
        simkern.generate("unknown-family")


def test_analyze_and_battery(example5x5):
    report = simkern.analyze(example5x5, "roots:4")
    assert report["pmp_order"] == 5
    assert report["pi_min"]["blocks"] == [[1, 2, 4, 5], [3]]
    battery = simkern.theorem_battery(example5x5)
    assert battery["ok"] is True
    assert any(line["check"] == "t3pmp-equality" for line in battery["checks"])


def test_error_mapping():
    with pytest.raises(simkern.Error):
        simkern.Matrix.from_json("not a matrix")
    bad = simkern.Matrix.from_json(
        {"n": 2, "domain": "rational", "entries": [["0", "1"], ["2", "0"]]}
    )
    with pytest.raises(simkern.Error):
        simkern.pmp_order(bad)  # not Hermitian
