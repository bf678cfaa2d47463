import pytest

import tring


@pytest.fixture(scope="module")
def ring():
    return tring.TensorRing(tring.example_qnak())


def test_example_dimensions(ring):
    inst = tring.example_qnak()
    assert (inst.dim_r, inst.dim_m, inst.field) == (6, 4, 2)
    assert ring.nil_index == 1
    assert ring.power_dims == [6, 4]
    assert ring.dim_t == 10
    assert len(ring.structure()["labels"]) == 10


def test_hypotheses(ring):
    h = ring.hypotheses("gp")
    assert h["applicable"] == "true"


def test_verify_is_deterministic(ring):
    a, code = ring.verify("gp", samples=30, seed=7)
    b, _ = ring.verify("gp", samples=30, seed=7)
    assert code == 0
    assert a["status"] == "VERIFIED"
    assert a == b


def test_classify_round_trip(ring):
    pair = ring.random_pair(seed=3)
    res = ring.classify(pair, "gp")
    assert res["structural"] == res["direct"]
    assert res["verdict"] == ("true" if res["uMono"] else "false")
    copair = ring.random_copair(seed=3)
    assert ring.classify(copair, "gi")["kind"] == "copair"


def test_lemmas(ring):
    rep, code = ring.lemmas(samples=5, seed=1)
    assert code == 0
    assert rep["status"] == "PASS"


def test_errors_and_files(tmp_path):
    with pytest.raises(tring.TringError, match="PreconditionViolated"):
        tring.example_qnak(i=2, j=3)
    tring.example_qnak().write(str(tmp_path))
    inst = tring.load_manifest(tmp_path)
    assert inst.dim_m == 4
    with pytest.raises(ValueError):
        tring.load_manifest(tmp_path / "missing")
