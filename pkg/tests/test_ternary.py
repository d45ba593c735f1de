"""Digit-vector arithmetic and the digit-2-free scanner."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bblab import fst, ternary
from bblab.errors import MalformedTape
from bblab.ternary import (ScanReport, TernaryNumber, decode_tape_number,
                           has_digit_two, power_of_two_ternary,
                           powers_of_two, scan_erdos)


def test_canonical_form_strips_leading_zeros():
    assert TernaryNumber([1, 0, 0]) == TernaryNumber([1])
    assert len(TernaryNumber([0, 0, 0])) == 1
    assert int(TernaryNumber([0])) == 0


def test_rejects_bad_digits():
    with pytest.raises(ValueError):
        TernaryNumber([])
    with pytest.raises(ValueError):
        TernaryNumber([3])
    with pytest.raises(ValueError):
        TernaryNumber([-1])


def test_from_int_round_trip():
    for v in (0, 1, 2, 3, 8, 81, 1048576):
        assert int(TernaryNumber.from_int(v)) == v
    with pytest.raises(ValueError):
        TernaryNumber.from_int(-1)


def test_digit_order_is_least_significant_first():
    x = TernaryNumber.from_int(11)  # 102 in base 3
    assert list(x) == [2, 0, 1]
    assert x.lsf_str() == "201"
    assert x.msf_str() == "102"


def test_equality_and_hashing():
    a = TernaryNumber.from_int(16)
    b = TernaryNumber([1, 2, 1])
    assert a == b and hash(a) == hash(b)
    assert a != TernaryNumber.from_int(17)
    assert a.__eq__(16) is NotImplemented


def test_doubled_matches_integer_doubling():
    x = TernaryNumber.from_int(1)
    for n in range(1, 60):
        x = x.doubled()
        assert int(x) == 2 ** n


def test_three_doubling_paths_agree():
    """Vector doubling, the schoolbook oracle, and the transducer must
    compute the same digits."""
    x = TernaryNumber.from_int(1)
    for _ in range(200):
        by_vector = x.doubled()
        by_oracle = TernaryNumber(fst.oracle_double(x))
        padded = x.lsf_str() + "0"
        by_fst = TernaryNumber([int(d)
                                for d in fst.double_reverse_ternary(padded)])
        assert by_vector == by_oracle == by_fst
        x = by_vector


def test_powers_of_two_generator():
    values = dict(powers_of_two(12))
    assert int(values[0]) == 1
    assert int(values[12]) == 4096
    assert power_of_two_ternary(12) == values[12]
    with pytest.raises(ValueError):
        power_of_two_ternary(-1)


def test_has_digit_two():
    assert not has_digit_two(TernaryNumber.from_int(4))      # 11
    assert has_digit_two(TernaryNumber.from_int(2))
    assert not has_digit_two(TernaryNumber.from_int(256))    # 100111


def test_scan_finds_exactly_0_2_8_up_to_1000():
    report = scan_erdos(1000)
    assert report.free_exponents == [0, 2, 8]
    assert report.counterexample is None
    assert report.digit_lengths[8] == 6
    assert report.bound == 1000


def test_scan_counterexample_is_smallest_free_exponent_above_8():
    report = ScanReport(bound=10, free_exponents=[0, 2, 8, 9, 10])
    assert report.counterexample == 9
    assert "counterexample" in report.to_dict()


def test_decode_tape_number():
    assert int(decode_tape_number("201##")) == 11
    assert int(decode_tape_number("###")) == 0
    assert int(decode_tape_number("")) == 0
    with pytest.raises(MalformedTape):
        decode_tape_number("20#1")
    with pytest.raises(MalformedTape):
        decode_tape_number("2x1")


def test_decode_with_custom_blank():
    assert int(decode_tape_number("12.", blank=".")) == 7


@given(st.integers(min_value=0, max_value=10 ** 30))
@settings(max_examples=200, deadline=None)
def test_property_int_round_trip(v):
    assert int(TernaryNumber.from_int(v)) == v


@given(st.integers(min_value=0, max_value=10 ** 30))
@settings(max_examples=200, deadline=None)
def test_property_doubling(v):
    assert int(TernaryNumber.from_int(v).doubled()) == 2 * v
