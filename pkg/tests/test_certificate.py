import json

from tbsym.boardman import CONFIRMED, PARTIAL, JetConfig, certify


def test_confirmed_small_pair():
    cert = certify(2, 2)
    assert cert.verdict == CONFIRMED
    assert cert.problems == []
    doc = json.loads(cert.to_json())
    assert doc["closed_form"]["symbol"] == "2"
    assert doc["jet_equality"]["status"] == "PASS"
    assert doc["verdict"] == "CONFIRMED"


def test_key_order_is_fixed():
    doc = json.loads(certify(3, 2).to_json())
    assert list(doc) == ["tool", "version", "n", "r", "config", "closed_form", "structured",
                         "oracle", "jet_equality", "identities", "problems", "verdict"]


def test_capped_oracle_gives_partial():
    cert = certify(3, 3, JetConfig(oracle_mode="minors", max_minors=10))
    assert cert.verdict == PARTIAL
    doc = json.loads(cert.to_json())
    assert doc["oracle"]["status"] == "inconclusive"
    assert doc["jet_equality"]["status"] == "SKIPPED"


def test_json_is_byte_identical_across_runs():
    for n, r in [(3, 2), (5, 3)]:
        assert certify(n, r).to_json() == certify(n, r).to_json()


def test_uneven_pair_records_splices():
    doc = json.loads(certify(5, 3).to_json())
    assert doc["verdict"] == "CONFIRMED"
    assert doc["closed_form"]["symbol"] == "3,2,1,1"
    assert doc["jet_equality"]["steps"] == [True] * 4
