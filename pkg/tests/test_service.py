import json

import pytest
from starlette.testclient import TestClient

from foulkes.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_verify_endpoint(client):
    response = client.post("/verify", json={"suite": "prop-gcd", "n_max": 12})
    assert response.status_code == 200
    report = response.json()
    assert report["suite"] == "prop-gcd"
    assert report["passed"] is True
    assert all(check["passed"] for check in report["checks"])
    assert [check["name"] for check in report["checks"]] == [
        "multinomial-gcd-enumerated",
        "divisibility-classical",
    ]


def test_verify_rejects_unknown_suite(client):
    response = client.post("/verify", json={"suite": "nope", "n_max": 3})
    assert response.status_code == 422


def test_enumerate_stream(client):
    response = client.get("/enumerate/3")
    assert response.status_code == 200
    lines = [json.loads(line) for line in response.text.splitlines() if line]
    assert lines[-1] == {"count": 2}
    records = lines[:-1]
    assert records[0]["phi_coords"] == ["0", "0", "0"]
    assert records[1]["phi_coords"] == ["0", "1/2", "0"]
    assert records[1]["multiplicities"] == {"1,1,1": 0, "2,1": 1, "3": 0}
    assert records[1]["a"] == [0, 1, 0]


def test_enumerate_counts(client):
    for n, count in [(1, 1), (4, 3), (5, 24), (6, 10)]:
        response = client.get(f"/enumerate/{n}")
        lines = response.text.splitlines()
        assert json.loads(lines[-1]) == {"count": count}
        assert len(lines) == count + 1


def test_enumerate_rejects_bad_n(client):
    assert client.get("/enumerate/0").status_code == 422
    assert client.get("/enumerate/99").status_code == 422


def test_param_to_theta(client):
    response = client.post("/param/to-theta", json={"n": 3, "a": [0, 1, 0]})
    assert response.status_code == 200
    body = response.json()
    assert body["phi_coords"] == ["0", "1/2", "0"]
    assert body["multiplicities"]["2,1"] == 1
    assert client.post("/param/to-theta", json={"n": 3, "a": [0, -1, 0]}).status_code == 422


def test_param_from_theta(client):
    response = client.post("/param/from-theta", json={"n": 3, "coords": ["1", "1", "1"]})
    assert response.status_code == 200
    assert response.json()["a"] == [1, 2, 1]


def test_param_from_theta_rejects_non_character(client):
    response = client.post("/param/from-theta", json={"n": 3, "coords": ["1/3", "0", "0"]})
    assert response.status_code == 400
    assert "multiplicity" in response.json()["detail"]


def test_param_from_theta_rejects_garbage(client):
    response = client.post("/param/from-theta", json={"n": 3, "coords": ["x", "0", "0"]})
    assert response.status_code == 422


def test_export_phi_csv(client):
    response = client.get("/export/phi", params={"n": 3, "format": "csv"})
    assert response.status_code == 200
    assert response.text == "i,L1,L2,L3\n0,1,1,1\n1,-2,0,4\n2,1,-1,1\n"


def test_export_irr_json(client):
    response = client.get("/export/irr", params={"n": 4, "format": "json"})
    body = json.loads(response.text)
    assert len(body["rows"]) == 5
    assert body["partitions"][0] == [4]
    assert body["rows"][0] == [1, 1, 1, 1, 1]


def test_export_c_tensor(client):
    response = client.get("/export/c-tensor", params={"n": 2, "format": "json"})
    body = json.loads(response.text)
    assert body["c"][0][0][0] == 1


def test_export_deterministic_bytes(client):
    first = client.get("/export/omega", params={"n": 5, "format": "json"}).content
    second = client.get("/export/omega", params={"n": 5, "format": "json"}).content
    assert first == second
    first = client.get("/export/irr", params={"n": 5, "format": "csv"}).content
    second = client.get("/export/irr", params={"n": 5, "format": "csv"}).content
    assert first == second


def test_export_matrix_and_gram(client):
    response = client.get(
        "/export/matrix", params={"n": 3, "src": "psi", "dst": "phi", "format": "json"}
    )
    assert response.status_code == 200
    body = json.loads(response.text)
    assert body["rows"] == [["1", "2", "1"], ["0", "1", "1"], ["0", "0", "1"]]
    response = client.get("/export/gram", params={"n": 3, "src": "gamma", "format": "csv"})
    assert response.text.splitlines()[1:] == ["0,1,4,10", "1,4,17,44", "2,10,44,117"]
    response = client.get("/export/gram", params={"n": 4, "src": "phi", "format": "json"})
    rows = json.loads(response.text)["rows"]
    assert rows == [
        ["1" if i == j else "0" for j in range(4)] for i in range(4)
    ]
    assert client.get("/export/matrix", params={"n": 3, "src": "zeta"}).status_code == 422


def test_export_rejects_unknown_table(client):
    assert client.get("/export/zeta", params={"n": 3}).status_code == 422
