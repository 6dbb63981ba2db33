"""Service handlers and the HTTP surface around them."""
from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from hilbertdepth import __version__, schemas, service
from hilbertdepth.api import app

client = TestClient(app)


def test_compute_series_payload():
    resp = service.compute_series(schemas.SeriesRequest(n=3, d=2, k_max=3))
    assert resp.closed_form == "T^2(1-T)^-3 + 2 T^2(1-T)^-2"
    assert [(t.coeff, t.t_power, t.pole_order) for t in resp.terms] == [
        ("1", 2, 3),
        ("2", 2, 2),
    ]
    assert resp.coefficients.start_degree == 2
    assert resp.coefficients.values == ["3", "7"]


def test_compute_series_without_expansion():
    resp = service.compute_series(schemas.SeriesRequest(n=3, d=2))
    assert resp.coefficients is None


def test_compute_coefficient_all_routes_agree():
    resp = service.compute_coefficient(schemas.CoeffRequest(n=3, d=2, k=3, method="all"))
    assert resp.values == {
        "formula": "7",
        "recurrence": "7",
        "enumerate": "7",
        "genfunc": "7",
    }
    assert resp.agree


def test_compute_coefficient_single_route():
    resp = service.compute_coefficient(schemas.CoeffRequest(n=4, d=2, k=2))
    assert resp.values == {"formula": "6"}
    assert resp.agree


def test_compute_coefficient_below_degree():
    resp = service.compute_coefficient(schemas.CoeffRequest(n=5, d=2, k=1, method="all"))
    assert set(resp.values.values()) == {"0"}


def test_compute_depth_both():
    resp = service.compute_depth(schemas.DepthRequest(n=5, d=2))
    assert (resp.hdepth, resp.failing_r, resp.failing_k, resp.failing_coeff) == (
        3,
        4,
        3,
        "-10",
    )


def test_compute_depth_formula_only():
    resp = service.compute_depth(schemas.DepthRequest(n=5, d=2, method="formula"))
    assert resp.hdepth == 3
    assert resp.failing_r is None and resp.failing_coeff is None


def test_compute_table():
    resp = service.compute_table(schemas.TableRequest(n_max=3, d_max=3))
    assert [(r.n, r.d) for r in resp.rows] == [
        (1, 1),
        (2, 1),
        (2, 2),
        (3, 1),
        (3, 2),
        (3, 3),
    ]
    assert all(r.agree for r in resp.rows)


def test_run_verification_single_suite():
    resp = service.run_verification(schemas.VerifyRequest(suite="tail", n_max=6))
    assert resp.passed and resp.failures == 0
    assert [s.suite for s in resp.suites] == ["tail"]


def test_request_validation_rejects_bad_params():
    with pytest.raises(ValueError):
        schemas.DepthRequest(n=2, d=3)
    with pytest.raises(ValueError):
        schemas.SeriesRequest(n=3, d=2, k_max=20_000)


def test_health_endpoint():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_depth_endpoint_matches_pinned_schema():
    resp = client.post("/depth", json={"n": 5, "d": 2})
    assert resp.status_code == 200
    assert resp.json() == {
        "n": 5,
        "d": 2,
        "hdepth": 3,
        "failing_r": 4,
        "failing_k": 3,
        "failing_coeff": "-10",
    }


def test_invalid_params_give_422():
    resp = client.post("/depth", json={"n": 2, "d": 3})
    assert resp.status_code == 422


def test_too_large_gives_400():
    resp = client.post("/coeff", json={"n": 80, "d": 2, "k": 40, "method": "enumerate"})
    assert resp.status_code == 400
    assert "exceeds" in resp.json()["detail"]


def test_series_endpoint_roundtrip():
    resp = client.post("/series", json={"n": 1, "d": 1, "k_max": 3})
    body = resp.json()
    assert body["closed_form"] == "T(1-T)^-1"
    assert body["coefficients"]["values"] == ["1", "1", "1"]


def test_verify_endpoint():
    resp = client.post("/verify", json={"suite": "prop33", "n_max": 12})
    body = resp.json()
    assert resp.status_code == 200
    assert body["passed"] is True
    assert body["suites"][0]["suite"] == "prop33"
    assert body["suites"][0]["checks"] == 78


def test_table_endpoint():
    resp = client.post("/table", json={"n_max": 4, "d_max": 2})
    rows = resp.json()["rows"]
    assert len(rows) == 7
    assert all(row["agree"] for row in rows)


def test_big_integers_serialized_as_decimal_strings():
    resp = client.post("/coeff", json={"n": 60, "d": 30, "k": 40})
    value = resp.json()["values"]["formula"]
    assert isinstance(value, str)
    assert int(value) > 2**63  # would truncate in 64-bit consumers
    # Lossless round trip through JSON text.
    assert json.loads(json.dumps(resp.json()))["values"]["formula"] == value
