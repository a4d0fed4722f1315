import numpy as np
import pytest

from arbor.runtime import RandomStream, RoundLedger, as_stream, charge_phase, derive_stream, merge_parallel


def test_ledger_totals():
    led = RoundLedger()
    charge_phase(led, "a", 3, 2)
    led.charge("b", 5)
    assert led.total_rounds == 11
    doc = led.to_json()
    assert doc["total_rounds"] == 11
    assert RoundLedger.from_json(doc).to_json() == doc


def test_ledger_rejects_bad_charges():
    with pytest.raises(ValueError):
        RoundLedger().charge("x", -1)
    with pytest.raises(ValueError):
        RoundLedger().charge("x", 1, 0)


def test_parallel_charge_is_max():
    parts = [RoundLedger().charge("p", 4), RoundLedger().charge("q", 2).charge("q", 5)]
    assert merge_parallel(parts) == 7
    assert merge_parallel(reversed(parts)) == 7
    led = RoundLedger().charge_parallel("both", parts)
    assert led.total_rounds == 7


def test_extend_prefixes_labels():
    inner = RoundLedger().charge("x", 2)
    outer = RoundLedger().extend(inner, "sub:")
    assert outer.phases[0].label == "sub:x"


def test_streams_are_pure_functions_of_path():
    s = RandomStream(7)
    a = s.derive("x", 1).generator().integers(0, 10**9, size=5)
    b = derive_stream(RandomStream(7), "x", 1).generator().integers(0, 10**9, size=5)
    c = s.derive("x", 2).generator().integers(0, 10**9, size=5)
    d = RandomStream(8).derive("x", 1).generator().integers(0, 10**9, size=5)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


def test_as_stream():
    assert as_stream(None) == RandomStream(0)
    assert as_stream(5) == RandomStream(5)
    s = RandomStream(3).derive("q")
    assert as_stream(s) is s
