import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseqkit.fcsr import BinarySequence, lsequence
from lseqkit.seqops import (
    arithmetic_crosscorrelation,
    complement,
    cyclic_match,
    decimate,
    ideal_crosscorrelation,
    minimal_period,
    shift,
)
from oracles import naive_decimate, rational_acorr

bits_st = st.binary(min_size=1, max_size=24).map(
    lambda raw: BinarySequence(bytes(b & 1 for b in raw))
)


def coprime_pairs(seq):
    return [d for d in range(1, seq.period + 1) if math.gcd(d, seq.period) == 1]


def test_decimate_frozen():
    a = lsequence(5)
    assert decimate(a, 3).to01() == "1001"
    assert decimate(a, 1) == a
    assert decimate(lsequence(9), 5).to01() == "100011"


def test_decimate_validation():
    a = lsequence(5)
    with pytest.raises(ValueError):
        decimate(a, 2)
    with pytest.raises(ValueError):
        decimate(a, 0)
    one = BinarySequence(b"\x01")
    assert decimate(one, 7) == one


@given(bits_st, st.integers(min_value=-30, max_value=60))
def test_decimate_matches_naive(seq, d):
    if math.gcd(d % seq.period, seq.period) != 1:
        return
    assert decimate(seq, d).bits == naive_decimate(seq, d % seq.period)


@given(bits_st, st.integers(1, 59), st.integers(1, 59))
def test_decimate_composition(seq, c, d):
    t = seq.period
    if math.gcd(c, t) != 1 or math.gcd(d, t) != 1:
        return
    assert decimate(decimate(seq, c), d) == decimate(seq, c * d % t if t > 1 else 1)


@given(bits_st, st.integers(1, 59), st.integers(-20, 20))
def test_decimate_shift_interplay(seq, d, tau):
    if math.gcd(d, seq.period) != 1:
        return
    assert shift(decimate(seq, d), tau) == decimate(shift(seq, d * tau), d)


def test_shift_basics():
    a = lsequence(5)
    assert shift(a, 1).to01() == "1001"
    assert shift(a, 0) is a
    assert shift(a, 4) == a
    assert shift(a, -1) == shift(a, 3)
    assert shift(shift(a, 1), 2) == shift(a, 3)


def test_complement():
    a = lsequence(9)
    assert complement(a).to01() == "000111"
    assert complement(complement(a)) == a


def test_cyclic_match_frozen_tables():
    a11 = lsequence(11)
    expected11 = {(1, 3): 2, (1, 7): 4, (1, 9): 6, (3, 7): 2, (3, 9): 4, (7, 9): 2}
    for (c, d), tau in expected11.items():
        assert cyclic_match(decimate(a11, c), decimate(a11, d)) == tau
    a13 = lsequence(13)
    assert cyclic_match(decimate(a13, 1), decimate(a13, 5)) == 0
    assert cyclic_match(decimate(a13, 7), decimate(a13, 11)) == 0
    assert decimate(a13, 5) == a13
    for c, d in ((1, 7), (1, 11), (5, 7), (5, 11)):
        assert cyclic_match(decimate(a13, c), decimate(a13, d)) is None


def test_cyclic_match_validation():
    with pytest.raises(ValueError):
        cyclic_match(lsequence(5), lsequence(9))


@given(bits_st, st.integers(0, 40))
def test_cyclic_match_shift_roundtrip(seq, k):
    tau = cyclic_match(seq, shift(seq, k))
    assert tau == k % minimal_period(seq)
    assert cyclic_match(seq, seq) == 0


def test_minimal_period():
    assert minimal_period(BinarySequence(b"\x01" * 6)) == 1
    assert minimal_period(BinarySequence.from01("101010")) == 2
    assert minimal_period(lsequence(5)) == 4
    assert minimal_period(BinarySequence.from01("110110")) == 3


def test_acorr_frozen_q5():
    a = lsequence(5)
    b = decimate(a, 3)
    values = [arithmetic_crosscorrelation(a, b, tau).value for tau in range(4)]
    assert values == [0, 0, 0, 4]


def test_acorr_spike_at_inverse_rotation():
    # When shift(x, k) == y, the difference stream of x against shift(y, T-k)
    # vanishes, giving the extreme value T there.
    for q, c, d in ((5, 1, 3), (11, 1, 3), (11, 3, 9), (13, 1, 5)):
        a = lsequence(q)
        x, y = decimate(a, c), decimate(a, d)
        k = cyclic_match(x, y)
        t_len = x.period
        spike = (t_len - k) % t_len
        for tau in range(t_len):
            value = arithmetic_crosscorrelation(x, y, tau).value
            assert value == (t_len if tau == spike else 0)


def test_acorr_result_fields():
    a = lsequence(9)
    b = decimate(a, 5)
    res = arithmetic_crosscorrelation(a, b, 2)
    assert res.tau == 2
    assert res.window_period == 6
    assert len(res.difference_bits) == res.preperiod + 6
    assert set(res.difference_bits) <= {0, 1}
    with pytest.raises(ValueError):
        arithmetic_crosscorrelation(lsequence(5), lsequence(9))


def test_acorr_exhaustive_small_periods_vs_rational():
    # Every pair of period-4 sequences, every shift, against the exact
    # rational oracle.
    seqs = [
        BinarySequence(bytes((n >> i) & 1 for i in range(4))) for n in range(16)
    ]
    for x in seqs:
        for y in seqs:
            for tau in range(4):
                got = arithmetic_crosscorrelation(x, y, tau).value
                assert got == rational_acorr(x, y, tau)


@given(bits_st, bits_st, st.integers(0, 30))
def test_acorr_matches_rational_oracle(x, y, tau):
    if x.period != y.period:
        return
    assert arithmetic_crosscorrelation(x, y, tau).value == rational_acorr(x, y, tau)


def test_ideal_crosscorrelation():
    a13 = lsequence(13)
    assert ideal_crosscorrelation(decimate(a13, 1), decimate(a13, 7))
    a5 = lsequence(5)
    assert not ideal_crosscorrelation(a5, decimate(a5, 3))
