import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseqkit.fcsr import (
    BinarySequence,
    dyadic_expansion,
    fcsr_run,
    lseq_exponential,
    lseq_rational,
    lsequence,
)
from lseqkit.numtheory import Modulus, eligible_moduli


def test_binary_sequence_validation():
    seq = BinarySequence.from01("1100")
    assert seq.period == 4
    assert seq.to01() == "1100"
    assert [seq.bit(t) for t in range(6)] == [1, 1, 0, 0, 1, 1]
    assert list(seq) == [1, 1, 0, 0]
    assert len(seq) == 4
    with pytest.raises(ValueError):
        BinarySequence(b"")
    with pytest.raises(ValueError):
        BinarySequence(b"\x00\x02")
    with pytest.raises(ValueError):
        BinarySequence.from01("10x1")
    assert BinarySequence.from_bits([1, 0, 1]) == BinarySequence(b"\x01\x00\x01")


def test_dyadic_expansion_frozen():
    e = dyadic_expansion(1, 3, 6)
    assert (e.bits, e.preperiod, e.period) == ((1, 1, 0, 1, 0, 1), 1, 2)
    e = dyadic_expansion(0, 7, 4)
    assert (e.bits, e.preperiod, e.period) == ((0, 0, 0, 0), 0, 1)
    e = dyadic_expansion(-1, 5, 8)
    assert (e.bits, e.preperiod, e.period) == ((1, 1, 0, 0, 1, 1, 0, 0), 0, 4)


def test_dyadic_expansion_validation():
    with pytest.raises(ValueError):
        dyadic_expansion(1, 4, 3)
    with pytest.raises(ValueError):
        dyadic_expansion(1, -3, 3)
    with pytest.raises(ValueError):
        dyadic_expansion(1, 3, 0)


@given(
    st.integers(min_value=-200, max_value=200),
    st.integers(min_value=0, max_value=100),
    st.integers(min_value=1, max_value=40),
)
def test_dyadic_expansion_prefix_congruence(num, den_seed, count):
    den = 2 * den_seed + 1
    exp = dyadic_expansion(num, den, count)
    partial = sum(b << i for i, b in enumerate(exp.bits))
    # The first k bits of the expansion of num/den satisfy
    # num = den * partial (mod 2**k).
    assert (num - den * partial) % (1 << count) == 0


@given(
    st.integers(min_value=-200, max_value=200),
    st.integers(min_value=0, max_value=100),
)
def test_dyadic_expansion_cycle_structure(num, den_seed):
    den = 2 * den_seed + 1
    exp = dyadic_expansion(num, den, 1)
    window = exp.preperiod + 2 * exp.period
    bits = dyadic_expansion(num, den, window).bits
    for t in range(exp.preperiod, window - exp.period):
        assert bits[t] == bits[t + exp.period]


def test_lsequence_frozen_strings():
    assert lsequence(5).to01() == "1100"
    assert lsequence(9).to01() == "111000"
    assert lsequence(9, 2).to01() == "011100"


def test_three_generators_agree():
    for mod in eligible_moduli(100):
        for a in (1, 2, mod.q - 1):
            if a % mod.p == 0:
                continue
            s1 = lseq_exponential(mod, a)
            s2 = lseq_rational(mod, a)
            s3 = fcsr_run(mod, a)
            assert s1 == s2 == s3


def test_generators_extend_periodically():
    mod = Modulus.from_q(9)
    one = lseq_exponential(mod).bits
    assert lseq_exponential(mod, 1, 12).bits == one * 2
    assert fcsr_run(mod, 1, 15).bits == (one * 3)[:15]
    assert lseq_rational(mod, 1, 12).bits == one * 2


def test_lsequence_rejects_bad_inputs():
    with pytest.raises(ValueError):
        lsequence(7)
    with pytest.raises(ValueError):
        lseq_exponential(Modulus.from_q(9), 3)
    with pytest.raises(ValueError):
        lseq_exponential(Modulus.from_q(9), 0)
    with pytest.raises(ValueError):
        lseq_exponential(Modulus.from_q(9), 1, 0)


def test_half_period_complement():
    # The second half of an l-sequence period is the complement of the first.
    for q in (5, 9, 11, 13, 19, 27, 29, 37):
        bits = lsequence(q).bits
        half = len(bits) // 2
        assert bits[half:] == bytes(b ^ 1 for b in bits[:half])


def test_balance():
    for q in (5, 9, 11, 19, 27):
        bits = lsequence(q).bits
        assert sum(bits) * 2 == len(bits)


def test_seed_shift_duality():
    # Multiplying the seed by 2**-k shifts the sequence left by k.
    mod = Modulus.from_q(19)
    base = lseq_exponential(mod)
    inv2 = pow(2, -1, 19)
    for k in (1, 2, 5):
        shifted = lseq_exponential(mod, pow(inv2, k, 19))
        assert shifted.bits == base.bits[k:] + base.bits[:k]
