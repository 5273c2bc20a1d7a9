import pytest
from fastapi.testclient import TestClient

from hedgehog.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_classify_endpoint(client):
    body = {"universe": "inf", "apex": True, "default": [["0/1", "1/3", "oo"]]}
    r = client.post("/classify", json=body)
    assert r.status_code == 200
    assert r.json() == {"quotient": True, "metric": True, "compact": False}


def test_closure_endpoint(client):
    body = {
        "set": {
            "universe": "inf",
            "apex": False,
            "default": [],
            "exceptions": {"1": [["1/2", "1/1", "oc"]]},
        },
        "topology": "metric",
    }
    r = client.post("/closure", json=body)
    assert r.status_code == 200
    assert r.json()["exceptions"]["1"] == [["1/2", "1/1", "cc"]]


def test_ball_endpoint(client):
    body = {
        "universe": 8,
        "center": {"height": "1/2", "spine": 4},
        "radius": "1/4",
        "kind": "open",
    }
    r = client.post("/ball", json=body)
    assert r.status_code == 200
    assert r.json()["exceptions"]["4"] == [["1/4", "3/4", "oo"]]


def test_embed_and_invert_round_trip(client):
    pair = client.post("/embed-real", json={"x": "-7/3"}).json()
    r = client.post("/invert-real", json=pair)
    assert r.status_code == 200
    assert r.json() == {"x": "-7/3"}


def test_fan_endpoint(client):
    r = client.post("/fan", json={"height": "1/1", "label": "1/1"})
    assert r.json() == {"x": "1/2", "y": "1/2"}


def test_stone_endpoint(client):
    body = {
        "space": {
            "labels": ["a", "b", "c"],
            "dist": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]],
        },
        "cover": {"sets": [["a", "b"], ["b", "c"]]},
    }
    r = client.post("/stone", json=body)
    assert r.status_code == 200
    levels = r.json()["levels"]
    assert levels[0]["members"] == []
    assert {tuple(m["points"]) for m in levels[1]["members"]} == {("a", "b"), ("c",)}


def test_basis_endpoint(client):
    body = {
        "space": {
            "labels": ["a", "b", "c"],
            "dist": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]],
        },
        "resolution": 2,
    }
    r = client.post("/basis", json=body)
    assert r.status_code == 200
    data = r.json()
    assert data["basis_check"]["passed"] is True
    members = {tuple(m) for fam in data["families"] for m in fam["members"]}
    assert {("a",), ("b",), ("c",)} <= members


def test_kowalsky_endpoint(client):
    body = {
        "space": {
            "labels": ["a", "b"],
            "dist": [["0", "1/2"], ["1/2", "0"]],
        }
    }
    r = client.post("/kowalsky", json=body)
    assert r.status_code == 200
    data = r.json()
    assert data["separation"]["separates_points"] is True
    assert data["separation"]["separates_points_and_closed_sets"] is True


def test_extend_endpoint(client):
    body = {
        "space": {
            "labels": ["a", "b", "c"],
            "dist": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]],
        },
        "domain": ["a", "b"],
        "map": {"a": {"height": "1/1", "spine": 1}, "b": {"height": "1/1", "spine": 2}},
        "universe": 2,
    }
    r = client.post("/extend", json=body)
    assert r.status_code == 200
    data = r.json()
    assert data["F"]["c"] == {"apex": True}
    assert data["verification"]["all_passed"] is True


def test_subcover_endpoint(client):
    almost = {
        "universe": "inf",
        "apex": True,
        "default": [["0/1", "1/1", "oc"]],
        "exceptions": {"1": [["0/1", "1/2", "oo"]]},
    }
    tail = {
        "universe": "inf",
        "apex": False,
        "default": [],
        "exceptions": {"1": [["1/4", "1/1", "oc"]]},
    }
    r = client.post("/subcover", json={"stream": [almost, tail], "bound": 10})
    assert r.status_code == 200
    assert r.json()["indices"] == [0, 1]


def test_domain_error_maps_to_400(client):
    r = client.post(
        "/invert-real",
        json={
            "first": {"height": "1/2", "spine": 1},
            "second": {"height": "1/4", "spine": 1},
        },
    )
    assert r.status_code == 400
    assert r.json()["detail"]["error"] == "NotInImage"


def test_validation_error_maps_to_422(client):
    assert client.post("/classify", json={"apex": True}).status_code == 422
    assert client.post("/embed-real", json={}).status_code == 422


def test_malformed_rational_maps_to_422(client):
    r = client.post("/embed-real", json={"x": "pi"})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "MalformedInput"
