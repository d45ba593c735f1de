"""Lockstep verification of the 2-symbol machine against the 4-symbol one."""

import pytest

from bblab import machines, simcheck
from bblab.errors import OutOfRange, UndefinedCost, UnknownKey, ValidationError
from bblab.simcheck import (DEFAULT_ENCODING, Encoding, head_map,
                            state_map_h, step_cost, verify_simulation)
from bblab.tm import HALT, L, R, Transition


@pytest.fixture(scope="module")
def big():
    return machines.builtin_m152()


@pytest.fixture(scope="module")
def small():
    return machines.builtin_m54()


@pytest.fixture(scope="module")
def transcript(big, small):
    return verify_simulation(big, small, DEFAULT_ENCODING, 1000)


def test_encoding_must_be_injective_fixed_width():
    with pytest.raises(ValidationError):
        Encoding({"#": "bb", "0": "bb", "1": "ab", "2": "aa"})
    with pytest.raises(ValidationError):
        Encoding({"#": "bb", "0": "b", "1": "ab", "2": "aa"})


def test_state_map(small):
    assert state_map_h(("mul2_F", R)) == "mul2_F_sim"
    assert state_map_h(("rewind", R)) == "rewind_b"
    with pytest.raises(UnknownKey):
        state_map_h(("mul2_F", L))  # mul2 states are only entered rightward


def test_head_map():
    assert head_map(0, R) == 0
    assert head_map(0, L) == 1
    assert head_map(-1, L) == -1
    assert head_map(3, R) == 6


def test_step_cost_table():
    assert step_cost(("mul2_G", R), "1") == 4
    assert step_cost(("check_halt", L), "1") == 1
    with pytest.raises(UnknownKey):
        step_cost(("find_2", R), "0")
    with pytest.raises(UndefinedCost):
        step_cost(("rewind", R), "1")  # rewind enters rightward only on blank


def test_verification_passes_to_1000(transcript):
    assert transcript.ok
    assert transcript.status == "verified"
    assert transcript.n_verified == 1000
    assert "verified" in transcript.summary()


def test_time_scale_values(transcript):
    assert transcript.time_scale(0) == 0
    assert transcript.time_scale(5) == 10
    assert transcript.time_scale(9) == 19
    assert transcript.time_scale(16) == 35
    assert transcript.time_scale(17) == 38
    assert transcript.time_scale(333) == 741
    assert simcheck.time_scale(transcript, 5) == 10


def test_time_scale_is_strictly_increasing(transcript):
    f = transcript.f
    assert all(int(f[i]) < int(f[i + 1]) for i in range(len(f) - 1))


def test_time_scale_out_of_range(transcript):
    with pytest.raises(OutOfRange):
        transcript.time_scale(1001)
    with pytest.raises(OutOfRange):
        transcript.time_scale(-1)


def test_argument_validation(big, small):
    with pytest.raises(ValidationError):
        verify_simulation(small, small, DEFAULT_ENCODING, 10)  # big not binary
    with pytest.raises(ValidationError):
        verify_simulation(big, big, DEFAULT_ENCODING, 10)  # encoding not total


def test_corrupted_big_cell_is_detected(big, small):
    """Misdirecting an exercised transition derails the coupling quickly."""
    q = big.state_index("rewind_sim")
    tr = big.transition(q, 0)
    bad = big.with_cell(q, 0, Transition(1 - tr.write, tr.move,
                                         tr.next_state))
    out = verify_simulation(bad, small, DEFAULT_ENCODING, 1000)
    assert not out.ok
    assert out.status == "mismatch"
    assert out.mismatch["n"] <= 1000
    assert "expected" in out.summary()


def test_corrupted_next_state_is_detected(big, small):
    q = big.state_index("mul2_F_sim")
    tr = big.transition(q, 0)
    bad = big.with_cell(q, 0, Transition(tr.write, tr.move,
                                         big.state_index("rewind_b")))
    out = verify_simulation(bad, small, DEFAULT_ENCODING, 1000)
    assert not out.ok


def test_premature_big_halt_breaks_halting_synchrony(big, small):
    q = big.state_index("mul2_G_sim")
    bad = big.with_cell(q, 0, HALT)
    out = verify_simulation(bad, small, DEFAULT_ENCODING, 1000)
    assert not out.ok
    assert out.mismatch["kind"] == "halting-synchrony"


def test_small_halting_without_big_is_detected(big, small):
    """If the simulated machine halts but the simulator keeps running, the
    halting-synchrony check fires at that step."""
    q = small.state_index("check_halt")
    bad_small = small.with_cell(q, small.symbol_index("0"), HALT)
    out = verify_simulation(big, bad_small, DEFAULT_ENCODING, 1000)
    assert not out.ok
    assert out.mismatch["kind"] == "halting-synchrony"


def test_transcript_records_per_step_data(transcript):
    assert len(transcript.f) == 1001
    assert len(transcript.keys) == len(transcript.sigmas) == 1001
    assert transcript.heads[0] == 0
