from types import SimpleNamespace

import pytest
from hypothesis import given, settings, strategies as st

from tbsym.boardman import TheoremViolation, structured_chain, tb_symbol_structured
from tbsym.boardman import structured
from tbsym.mulmap import euclid_symbol


def test_examples():
    assert tb_symbol_structured(4, 2)[0] == (2, 2)
    assert tb_symbol_structured(5, 3)[0] == (3, 2, 1, 1)
    assert tb_symbol_structured(3, 2)[0] == (2, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_equal_degrees_take_one_step(n):
    sym, cert = tb_symbol_structured(n, n)
    assert sym == (n,)
    assert len(cert.steps) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 9), st.integers(0, 8))
def test_matches_euclid_and_is_non_increasing(r, extra):
    n = r + extra
    sym, cert = tb_symbol_structured(n, r)
    assert sym == euclid_symbol(n, r).symbol
    assert sym[0] == r
    assert all(x >= y for x, y in zip(sym, sym[1:]))
    assert cert.agrees


def test_splice_congruences_hold():
    for n, r in [(5, 3), (7, 4), (8, 5)]:
        cert = structured_chain(n, r, keep_jet=3, check_splice=True)
        checks = {k: v for step in cert.steps for k, v in step.membership.items()}
        assert checks and all(checks.values())


def test_kept_ideals_grow():
    cert = structured_chain(5, 3, keep_jet=2)
    assert len(cert.ideals) == len(cert.steps) == 4
    sizes = [len(ideal) for ideal in cert.ideals]
    assert sizes == sorted(sizes)


def test_wrong_prediction_is_reported(monkeypatch):
    monkeypatch.setattr(structured, "euclid_symbol",
                        lambda n, r: SimpleNamespace(symbol=(2, 2)))
    with pytest.raises(TheoremViolation) as info:
        structured_chain(3, 2)
    cert = info.value.certificate
    assert cert.status == "violation"
    assert "predicted" in cert.notes[-1]
