import json
import math
from pathlib import Path

import numpy as np
import pytest

import gsfock

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_flip_and_tilde():
    tau = gsfock.flip(2)
    assert tau.shape == (4, 4)
    assert np.array_equal(gsfock.tilde(tau), tau)
    rng = np.random.default_rng(0)
    t = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    assert np.array_equal(gsfock.untilde(gsfock.tilde(t)), t)


def test_place_matches_kron():
    tau = gsfock.flip(2)
    assert np.array_equal(gsfock.place(tau, 1, 3, 2), gsfock.kron(tau, np.eye(2)))
    assert gsfock.operator_norm(0.5 * tau) == pytest.approx(0.5)


def test_quon_gram_is_q_factorial():
    spec = gsfock.quon(1, 0.5)
    assert gsfock.gram(spec["cross"], 3)[0, 0].real == pytest.approx(2.625, abs=1e-12)
    assert spec["braid"] is None


def test_fermion_quotient_dims():
    spec = gsfock.fermion(3)
    assert gsfock.quotient_dims(spec["cross"], spec["braid"], 4) == [1, 3, 3, 1, 0]


def test_relations_hold_for_color():
    spec = gsfock.color([2], [[0], [1]])
    assert gsfock.check_consistency(spec["cross"], spec["braid"])["pass"]
    assert gsfock.verify_adjointness(spec["cross"], 3) <= 1e-10
    assert gsfock.verify_crel(spec["cross"], 3) <= 1e-10


def test_forced_braid_fails_consistency():
    out = gsfock.check_consistency(gsfock.quon(2, 0.5)["cross"], gsfock.flip(2))
    assert not out["pass"]
    assert out["projector"] == pytest.approx(0.5)


def test_yang_baxter_detection():
    tau = gsfock.flip(2).copy()
    residual, ok = gsfock.check_yang_baxter(tau)
    assert ok and residual == 0.0
    tau[1, 1] += 0.1
    residual, ok = gsfock.check_yang_baxter(tau)
    assert not ok and residual > 1e-3


def test_bad_shape_raises():
    with pytest.raises(ValueError):
        gsfock.tilde(np.zeros((3, 3)))


def test_report_and_cli():
    text, code = gsfock.report((FIXTURES / "boson_n2.json").read_text())
    assert code == 0
    report = json.loads(text)
    assert report["verdict"] == "pass"
    assert report["operators"]["quotient"]["dims"] == [1, 2, 3, 4, 5]
    code, out, _ = gsfock.run_cli(["check", str(FIXTURES / "quon_forced_braid.json")])
    assert code == 1
    assert "consistency_projector" in json.loads(out)["failed_checks"]
    code, _, _ = gsfock.run_cli(["check", str(FIXTURES / "malformed.json")])
    assert code == 2
    with pytest.raises(ValueError):
        gsfock.report("{")
    assert math.isfinite(report["config"]["tolerance"])
