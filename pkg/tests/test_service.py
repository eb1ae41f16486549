import numpy as np
import pytest
from fastapi.testclient import TestClient

import fracdecomp as fd
from fracdecomp.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def signal_payload():
    grid = fd.UniformGrid.from_window(-20.0, 20.0, 512)
    sig = fd.corpus.sample(fd.corpus.GaussianDerivative(), grid)
    return {
        "grid": {"x_min": grid.x_min, "dx": grid.dx, "n": grid.n},
        "values": sig.values.tolist(),
    }


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_apply_spectral(client, signal_payload):
    resp = client.post(
        "/apply",
        json={"signal": signal_payload, "order": 0.5, "side": "left", "method": "spectral"},
    )
    assert resp.status_code == 200
    out = resp.json()["signal"]
    assert len(out["values"]) == 512
    assert out["grid"] == signal_payload["grid"]


def test_apply_order_out_of_range(client, signal_payload):
    resp = client.post(
        "/apply",
        json={"signal": signal_payload, "order": 1.3, "side": "left", "method": "spectral"},
    )
    assert resp.status_code == 422
    body = resp.json()
    assert body["error"] == "order_out_of_range"


def test_apply_grunwald_matches_direct(client, signal_payload):
    resp = client.post(
        "/apply",
        json={"signal": signal_payload, "order": -0.3, "side": "right", "method": "grunwald"},
    )
    grid = fd.UniformGrid(**signal_payload["grid"])
    sig = fd.SampledSignal(grid, signal_payload["values"])
    direct = fd.apply_grunwald(sig, -0.3, fd.Side.RIGHT)
    assert np.allclose(resp.json()["signal"]["values"], direct.values, rtol=0, atol=0)


def test_decompose_and_reconstruct(client, signal_payload):
    resp = client.post(
        "/decompose",
        json={"signal": signal_payload, "variant": {"s": 0.25, "kind": "symmetric"}},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["residual_l2"] <= 1e-10
    assert body["symbol_min_modulus"] >= 2.0 * (1 - 1e-12)
    resp2 = client.post(
        "/reconstruct",
        json={"u": body["u"], "variant": {"s": 0.25, "kind": "symmetric"}},
    )
    rec = np.array(resp2.json()["signal"]["values"])
    orig = np.array(signal_payload["values"])
    assert np.max(np.abs(rec - orig)) <= 1e-9 * np.max(np.abs(orig))


def test_decompose_invalid_s(client, signal_payload):
    resp = client.post(
        "/decompose",
        json={"signal": signal_payload, "variant": {"s": 0.5}},
    )
    assert resp.status_code == 422
    assert resp.json()["error"] == "order_out_of_range"


def test_norms_endpoint(client, signal_payload):
    resp = client.post(
        "/norms", json={"signal": signal_payload, "orders": [0.0, 0.5, 1.0]}
    )
    rows = resp.json()["rows"]
    assert [r["mu"] for r in rows] == [0.0, 0.5, 1.0]
    assert rows[0]["norm"] == pytest.approx(np.sqrt(2.0) * rows[0]["seminorm"], rel=1e-9)


def test_decay_endpoint(client):
    grid = fd.UniformGrid.from_window(-20.0, 20.0, 4096)
    sig = fd.corpus.sample(fd.corpus.Box(-1.0, 1.0), grid)
    payload = {
        "grid": {"x_min": grid.x_min, "dx": grid.dx, "n": grid.n},
        "values": sig.values.tolist(),
    }
    resp = client.post(
        "/decay",
        json={
            "signal": payload,
            "xi_lo": 0.05 * grid.nyquist,
            "xi_hi": 0.30 * grid.nyquist,
        },
    )
    body = resp.json()
    assert abs(body["exponent"] + 1.0) <= 0.1
    assert not body["superpolynomial"]


def test_corpus_endpoints(client):
    entries = client.get("/corpus").json()["entries"]
    names = {e["name"] for e in entries}
    assert "gaussian" in names and "exp_left" in names
    resp = client.post(
        "/corpus/sample",
        json={"name": "gaussian", "x_min": -5.0, "x_max": 5.0, "n": 128,
              "params": {"width": 2.0}},
    )
    assert resp.status_code == 200
    vals = resp.json()["signal"]["values"]
    assert len(vals) == 128
    resp = client.post("/corpus/sample", json={"name": "nope", "n": 64})
    assert resp.status_code == 422


def test_grid_validation_via_pydantic(client):
    resp = client.post(
        "/apply",
        json={
            "signal": {"grid": {"x_min": 0.0, "dx": -1.0, "n": 8}, "values": [0.0] * 8},
            "order": 0.5,
        },
    )
    assert resp.status_code == 422


def test_verify_endpoint_with_injection(client):
    resp = client.post(
        "/verify",
        json={"suites": ["symbol_bounds"], "n": 256, "inject_suite": "symbol_bounds"},
    )
    body = resp.json()
    assert resp.status_code == 200
    assert body["passed"] is False
    cases = body["suites"][0]["cases"]
    assert cases[0]["info"].get("injected") == 1.0
    assert not cases[0]["passed"]
    assert all(c["passed"] for c in cases[1:])


def test_verify_unknown_suite(client):
    resp = client.post("/verify", json={"suites": ["bogus"]})
    assert resp.status_code == 422
