import pytest
from fastapi.testclient import TestClient

from leviform.parse import parse_holomorphic
from leviform.serialize import poly_from_json
from leviform.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_milnor_endpoint(client):
    r = client.post("/api/milnor", json={"nvars": 2, "expr": "x^2*y + y^3"})
    assert r.status_code == 200
    assert r.json()["mu"] == 4
    assert r.json()["pretty"] == ["4"]


def test_milnor_infinite(client):
    r = client.post("/api/milnor", json={"nvars": 2, "expr": "x^2"})
    assert r.status_code == 200
    assert r.json()["mu"] == "INFINITE"


def test_basis_endpoint(client):
    r = client.post("/api/basis", json={"nvars": 2, "expr": "x^2*y + y^4"})
    assert r.status_code == 200
    body = r.json()
    assert body["mu"] == 5
    assert [0, 0] in body["monomials"] and [0, 3] in body["monomials"]


def test_weights_endpoint(client):
    r = client.post("/api/weights", json={"nvars": 2, "expr": "x^2*y + y^4"})
    assert r.json()["weights"]["alpha"] == ["3/8", "1/4"]


def test_split_endpoint(client):
    r = client.post("/api/split", json={"nvars": 2, "expr": "x^2*y + y^3 + x^4"})
    body = r.json()
    assert poly_from_json(body["q"]) == parse_holomorphic("x^2*y + y^3", 2)
    assert poly_from_json(body["tail"]) == parse_holomorphic("x^4", 2)


def test_jet_endpoint(client):
    r = client.post("/api/jet", json={"nvars": 2, "expr": "x^5 + y^5 + x^3*y^3", "k": 5})
    assert poly_from_json(r.json()["poly"]) == parse_holomorphic("x^5 + y^5", 2)


def test_complexify_endpoint(client):
    r = client.post("/api/complexify", json={"nvars": 1, "expr": "z1*conj(z1)"})
    body = r.json()
    assert body["bipoly"]["zvars"] == 1
    assert body["pretty"] == ["z1*w1"]


def test_levicheck_endpoints(client):
    r = client.post("/api/levicheck", json={"nvars": 2, "expr": "Re(x^2*y + y^3)"})
    assert r.json()["verdict"] == "FLAT"
    assert r.json()["witness"] is None
    r = client.post("/api/levicheck", json={"nvars": 2, "expr": "z1*conj(z1) + Re(z2)"})
    body = r.json()
    assert body["verdict"] == "NOT_FLAT"
    assert body["witness"] is not None


def test_singcheck_endpoint(client):
    r = client.post("/api/singcheck", json={"nvars": 2, "expr": "Re(x^2*y + y^3)"})
    assert r.json()["origin_only"] is True
    r = client.post("/api/singcheck", json={"nvars": 2, "expr": "Re(x^2*y^2)"})
    assert r.json()["origin_only"] is False


def test_arnold_endpoint(client):
    r = client.post("/api/arnold", json={"nvars": 2, "expr": "x^5 + y^5"})
    body = r.json()
    assert body["template"]["extras"] == [{"monomial": [3, 3], "name": "c1"}]
    assert body["pretty"] == ["x^5 + y^5 + c1*x^3*y^3"]


def test_normalform_endpoint_auto_picks_weighted_shape(client):
    r = client.post("/api/normalform", json={"nvars": 2, "expr": "Re(x^2*y + y^4)"})
    body = r.json()
    assert body["template"]["heuristic"] is True
    assert body["template"]["weights"]["alpha"] == ["3/8", "1/4"]


def test_normalform_endpoint_homogeneous_shape(client):
    r = client.post("/api/normalform",
                    json={"nvars": 2, "expr": "Re(x^2*y + y^3)", "shape": "homogeneous"})
    body = r.json()
    assert body["template"]["mu"] == 4
    assert body["template"]["bound"] == 5
    assert "refined" in body["template"]


def test_domain_error_maps_to_400_with_category(client):
    r = client.post("/api/milnor", json={"nvars": 2, "expr": "x +"})
    assert r.status_code == 400
    assert r.json()["category"] == "PARSE_ERROR"
    r = client.post("/api/basis", json={"nvars": 2, "expr": "x^2*y^2"})
    assert r.status_code == 400
    assert r.json()["category"] == "NON_ISOLATED"
    r = client.post("/api/levicheck", json={"nvars": 1, "expr": "i*z1"})
    assert r.status_code == 400
    assert r.json()["category"] == "NOT_REAL_VALUED"


def test_validation_error_maps_to_422(client):
    r = client.post("/api/milnor", json={"nvars": 0, "expr": "x"})
    assert r.status_code == 422
    r = client.post("/api/jet", json={"nvars": 2, "expr": "x"})
    assert r.status_code == 422  # k missing


def test_degree_cap_request_field(client):
    r = client.post("/api/milnor",
                    json={"nvars": 2, "expr": "x^10*y + y^12", "degree_cap": 6})
    assert r.status_code == 400
    assert r.json()["category"] == "RESOURCE_LIMIT"
    # the default cap is generous enough for the same input
    r = client.post("/api/milnor", json={"nvars": 2, "expr": "x^10*y + y^12"})
    assert r.status_code == 200
