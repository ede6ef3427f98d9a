import pytest
from hypothesis import given, strategies as st

import loeschian.verify as verify_mod
from loeschian import (
    SweepRange,
    emit_sequence,
    verify_conjecture,
    verify_factor_theorem,
    verify_prime_theorems,
    verify_residues,
)
from loeschian.verify import MAX_MISMATCHES, _chunks
from oracles import brute_sequence


def test_sweep_range_validation():
    assert SweepRange(1, 5).workers == 1
    with pytest.raises(ValueError):
        SweepRange(0, 5)
    with pytest.raises(ValueError):
        SweepRange(5, 4)
    with pytest.raises(ValueError):
        SweepRange(1, 5, workers=0)


@given(
    st.integers(min_value=1, max_value=10**9),
    st.integers(min_value=0, max_value=10**4),
    st.integers(min_value=1, max_value=16),
)
def test_chunks_partition_the_range(lo, span, workers):
    hi = lo + span
    chunks = _chunks(lo, hi, workers)
    assert 1 <= len(chunks) <= workers
    assert chunks[0][0] == lo
    assert chunks[-1][1] == hi
    for (s1, e1), (s2, e2) in zip(chunks, chunks[1:]):
        assert s1 <= e1
        assert s2 == e1 + 1
    assert sum(e - s + 1 for s, e in chunks) == hi - lo + 1


def test_verify_conjecture_known_ranges():
    report = verify_conjecture(SweepRange(1, 1000))
    assert report.ok
    assert report.checked == 1000

    report = verify_conjecture(SweepRange(49, 49))
    assert report.ok
    assert report.checked == 1

    report = verify_conjecture(SweepRange(10, 10))
    assert report.ok


def test_verify_conjecture_guard():
    with pytest.raises(ValueError):
        verify_conjecture(SweepRange(1, 10**8 + 1))


def test_verify_conjecture_worker_count_does_not_change_content():
    serial = verify_conjecture(SweepRange(1, 2000, workers=1))
    parallel = verify_conjecture(SweepRange(1, 2000, workers=3))
    assert serial.checked == parallel.checked
    assert serial.mismatches == parallel.mismatches
    assert serial.ok and parallel.ok


def test_verify_residues_known_limits():
    report = verify_residues(100)
    assert report.ok
    assert report.checked == 101 * 102 // 2

    report = verify_residues(500)
    assert report.ok
    assert report.checked == 125751


def test_verify_residues_rejects_zero():
    # the report range starts at 1, so a limit of 0 has nothing to sweep
    with pytest.raises(ValueError):
        verify_residues(0)


def test_mismatches_are_capped(monkeypatch):
    monkeypatch.setattr(verify_mod, "_GOOD_RESIDUES", frozenset())
    report = verify_mod.verify_residues(100)
    assert not report.ok
    assert len(report.mismatches) == MAX_MISMATCHES


def test_verify_prime_theorems_known_limits():
    report = verify_prime_theorems(3)
    assert report.ok
    assert report.checked == 2

    report = verify_prime_theorems(7)
    assert report.ok
    assert report.checked == 4

    report = verify_prime_theorems(10**4)
    assert report.ok


def test_verify_prime_theorems_rejects_tiny_limit():
    with pytest.raises(ValueError):
        verify_prime_theorems(1)


def test_verify_factor_theorem_known_inputs():
    report = verify_factor_theorem(1, 1, 0)
    assert report.ok
    assert report.checked == 1

    report = verify_factor_theorem(5, 10, 7)
    assert report.ok
    assert report.checked == 10


def test_verify_factor_theorem_is_reproducible():
    first = verify_factor_theorem(40, 25, 1234)
    second = verify_factor_theorem(40, 25, 1234)
    assert first.checked == second.checked
    assert first.mismatches == second.mismatches


def test_verify_factor_theorem_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_factor_theorem(0, 1, 0)
    with pytest.raises(ValueError):
        verify_factor_theorem(5, 0, 0)


def test_emit_sequence_known_values():
    assert emit_sequence(13) == [0, 1, 3, 4, 7, 9, 12, 13]
    assert emit_sequence(0) == [0]
    assert emit_sequence(28) == [0, 1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28]


def test_emit_sequence_matches_brute_force():
    assert emit_sequence(500) == brute_sequence(500)


def test_emit_sequence_prefix_property():
    longer = emit_sequence(400)
    shorter = emit_sequence(150)
    assert longer[: len(shorter)] == shorter


def test_report_ok_reflects_mismatches():
    report = verify_residues(10)
    assert report.ok
    assert report.mismatches == []
    assert report.elapsed_ms >= 0.0
