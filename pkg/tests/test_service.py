"""HTTP surface of the phi3 service."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from falklift import parse_graph
from falklift.service.app import app

from .conftest import fixture_text

client = TestClient(app)


def test_healthz():
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


class TestPhi3Endpoint:
    def test_all_methods_on_bundled_example(self):
        resp = client.post(
            "/phi3", json={"graph_text": fixture_text("phi3_44.gg"), "method": "all"}
        )
        assert resp.status_code == 200
        data = resp.json()
        assert data["phi3_census"] == 44
        assert data["phi3_falk"] == 44
        assert data["phi3_kernel"] == 44
        assert data["agreement"] is True
        assert data["n_edges"] == 11 and data["m_hyperplanes"] == 12

    @pytest.mark.parametrize("method,key", [
        ("census", "phi3_census"),
        ("falk", "phi3_falk"),
        ("kernel", "phi3_kernel"),
    ])
    def test_single_method_returns_only_its_value(self, method, key):
        resp = client.post(
            "/phi3", json={"graph_text": fixture_text("gcirc.gg"), "method": method}
        )
        assert resp.status_code == 200
        data = resp.json()
        assert data[key] == 10
        others = {"phi3_census", "phi3_falk", "phi3_kernel"} - {key}
        assert not others & data.keys()

    def test_family_source(self):
        resp = client.post("/phi3", json={"family": "shi", "ell": 4})
        assert resp.status_code == 200
        assert resp.json()["phi3_census"] == 64

    def test_empty_graph(self):
        resp = client.post("/phi3", json={"graph_text": fixture_text("empty3.gg")})
        assert resp.status_code == 200
        data = resp.json()
        assert data["phi3_census"] == data["phi3_falk"] == data["phi3_kernel"] == 0


class TestCensusEndpoint:
    def test_gcirc(self):
        resp = client.post("/census", json={"graph_text": fixture_text("gcirc.gg")})
        assert resp.status_code == 200
        data = resp.json()
        assert data["counts"] == {"k3": 2, "k4": 0, "d2": 2, "g_circ": 1, "s3": 0}
        assert data["w2"] == 11
        assert data["circuits"] == [[0, 1, 2], [0, 3, 4], [1, 4, 5], [2, 3, 5]]

    def test_linial_empty_circuits(self):
        resp = client.post("/census", json={"family": "linial", "ell": 4})
        data = resp.json()
        assert data["counts"] == {"k3": 0, "k4": 0, "d2": 0, "g_circ": 0, "s3": 0}
        assert data["circuits"] == []


class TestDiagEndpoint:
    def test_worked_values(self):
        resp = client.post("/diag", json={"graph_text": fixture_text("gcirc.gg")})
        data = resp.json()
        assert (data["f3_count"], data["dim_span_f3"], data["dim_i2_3"]) == (12, 10, 14)
        resp = client.post("/diag", json={"graph_text": fixture_text("s3.gg")})
        data = resp.json()
        assert (data["f3_count"], data["dim_span_f3"], data["dim_i2_3"]) == (24, 19, 25)
        resp = client.post("/diag", json={"family": "braid", "ell": 4})
        assert resp.json()["dim_span_f3"] == 14


class TestGenEndpoint:
    def test_round_trip(self):
        resp = client.post("/gen", json={"family": "semiorder", "ell": 3})
        assert resp.status_code == 200
        data = resp.json()
        g = parse_graph(data["graph_text"])
        assert g.vertex_count == 3 and g.edge_count == 6
        assert data["phi3_closed_form"] == 6

    def test_bad_ell(self):
        resp = client.post("/gen", json={"family": "braid", "ell": 0})
        assert resp.status_code == 422

    def test_bad_family(self):
        resp = client.post("/gen", json={"family": "catalan", "ell": 3})
        assert resp.status_code == 422


class TestVerifyEndpoint:
    def test_identities_hold(self):
        resp = client.post("/verify", json={"graph_text": fixture_text("phi3_44.gg")})
        assert resp.status_code == 200
        data = resp.json()
        assert data["identities_hold"] is True
        assert data["agreement"] is True
        assert data["w2_geometric"] == data["w2_formula"] == 52
        assert data["dim_i2_3"] == data["dim_i2_3_formula"] == 124


class TestErrorContract:
    def test_parse_error(self):
        resp = client.post("/phi3", json={"graph_text": "vertices 2\nedge 1 2 oops\n"})
        assert resp.status_code == 400
        detail = resp.json()["detail"]
        assert detail["code"] == "parse_error"
        assert detail["line"] == 2

    def test_validation_error(self):
        text = "vertices 2\nedge 1 2 0\nedge 1 2 0\n"
        resp = client.post("/census", json={"graph_text": text})
        assert resp.status_code == 422
        detail = resp.json()["detail"]
        assert detail["code"] == "validation_error"
        assert detail["violations"][0]["kind"] == "balanced_digon"
        assert detail["violations"][0]["edge_ids"] == [1, 2]

    def test_missing_source(self):
        resp = client.post("/phi3", json={})
        assert resp.status_code == 422  # pydantic model validation

    def test_both_sources(self):
        resp = client.post(
            "/phi3",
            json={"graph_text": "vertices 1\n", "family": "braid", "ell": 2},
        )
        assert resp.status_code == 422

    def test_disagreement_maps_to_500(self, monkeypatch):
        import falklift.service.app as app_mod

        monkeypatch.setattr(app_mod, "phi3_census", lambda c: 999)
        resp = client.post("/phi3", json={"family": "braid", "ell": 3})
        assert resp.status_code == 500
        detail = resp.json()["detail"]
        assert detail["code"] == "disagreement"
        assert "999" in detail["message"]
