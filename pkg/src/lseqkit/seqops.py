"""Periodic binary sequence operators: decimation, shifts, 2-adic correlation.

The arithmetic cross-correlation of two period-T sequences subtracts their
2-adic numbers with borrow propagation and counts zeros minus ones across one
period of the eventually periodic difference stream. Unlike the classical
correlation, the subtraction carries memory, so the streaming implementation
tracks the borrow explicitly and detects the periodic regime by state repeat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fcsr import BinarySequence

__all__ = [
    "CorrelationResult",
    "decimate",
    "shift",
    "complement",
    "cyclic_match",
    "minimal_period",
    "arithmetic_crosscorrelation",
    "ideal_crosscorrelation",
]

# Memory ceiling for the replicate-and-stride decimation fast path.
_STRIDE_LIMIT = 1 << 22


def _decimate_bytes(data: bytes, d: int) -> bytes:
    """bytes of data[(d*t) % len(data)] for t in range(len(data))."""
    t = len(data)
    if d * t <= _STRIDE_LIMIT:
        # (data*d)[k*d] == data[(k*d) % t]: one slice does the whole map.
        return (data * d)[::d]
    return bytes(data[(d * i) % t] for i in range(t))


def decimate(seq: BinarySequence, d: int) -> BinarySequence:
    """The d-fold decimation b(t) = a(d*t), for d a unit modulo the period.

    Requiring gcd(d, T) == 1 keeps the result a single full-period cycle of
    the same length rather than a shorter subsampling.
    """
    t = seq.period
    d %= t
    if math.gcd(d, t) != 1:
        raise ValueError(f"decimation index {d} shares a factor with period {t}")
    if t == 1:
        return seq
    return BinarySequence(_decimate_bytes(seq.bits, d))


def shift(seq: BinarySequence, tau: int) -> BinarySequence:
    """Left shift: the sequence t -> a(t + tau)."""
    t = seq.period
    tau %= t
    if tau == 0:
        return seq
    return BinarySequence(seq.bits[tau:] + seq.bits[:tau])


def complement(seq: BinarySequence) -> BinarySequence:
    """Bitwise complement of one period."""
    return BinarySequence(bytes(b ^ 1 for b in seq.bits))


def _rotation_index(a: bytes, b: bytes) -> int | None:
    """Least k with a rotated left by k equal to b, or None."""
    k = (a + a).find(b)
    if k < 0:
        return None
    return k % len(a)


def cyclic_match(a: BinarySequence, b: BinarySequence) -> int | None:
    """Least tau >= 0 with shift(a, tau) == b, or None if no rotation works.

    tau == 0 (the sequences are equal as stored) counts as a match.
    """
    if a.period != b.period:
        raise ValueError(f"period mismatch: {a.period} vs {b.period}")
    return _rotation_index(a.bits, b.bits)


def minimal_period(seq: BinarySequence) -> int:
    """Least d >= 1 such that the stored period is d-periodic (d divides T)."""
    data = seq.bits
    t = len(data)
    for d in range(1, t + 1):
        if t % d == 0 and data[d:] == data[:-d]:
            return d
    raise AssertionError("unreachable: t itself always qualifies")


@dataclass(frozen=True)
class CorrelationResult:
    """Outcome of one arithmetic cross-correlation evaluation.

    value is (#zeros - #ones) over one length-T window of the periodic part
    of the difference stream; preperiod is where that guaranteed-periodic
    window begins; difference_bits holds the stream up to the window end.
    """

    tau: int
    value: int
    preperiod: int
    window_period: int
    difference_bits: tuple[int, ...]


def arithmetic_crosscorrelation(
    a: BinarySequence, b: BinarySequence, tau: int = 0
) -> CorrelationResult:
    """Arithmetic cross-correlation of a with b shifted left by tau.

    Streams the 2-adic difference a - shift(b, tau): at each step emit
    (a(t) - b(t+tau) - borrow) mod 2 and set the next borrow from the sign.
    The joint state (t mod T, borrow) must repeat, and because the repeated
    key fixes t mod T the detected cycle length is a multiple of T, so a
    window of exactly T bits from the repeat point covers whole periods of
    the difference stream (whose eventual period always divides T).
    """
    if a.period != b.period:
        raise ValueError(f"period mismatch: {a.period} vs {b.period}")
    t_len = a.period
    abits = a.bits
    bbits = shift(b, tau).bits
    stream = bytearray()
    seen: dict[tuple[int, int], int] = {}
    borrow = 0
    t = 0
    while (t % t_len, borrow) not in seen:
        seen[(t % t_len, borrow)] = t
        d = abits[t % t_len] - bbits[t % t_len] - borrow
        borrow = 1 if d < 0 else 0
        stream.append(d & 1)
        t += 1
    start = seen[(t % t_len, borrow)]
    while len(stream) < start + t_len:
        d = abits[t % t_len] - bbits[t % t_len] - borrow
        borrow = 1 if d < 0 else 0
        stream.append(d & 1)
        t += 1
    window = stream[start : start + t_len]
    value = t_len - 2 * sum(window)
    return CorrelationResult(
        tau=tau % t_len,
        value=value,
        preperiod=start,
        window_period=t_len,
        difference_bits=tuple(stream[: start + t_len]),
    )


def ideal_crosscorrelation(a: BinarySequence, b: BinarySequence) -> bool:
    """True when the arithmetic cross-correlation vanishes at every shift."""
    return all(
        arithmetic_crosscorrelation(a, b, tau).value == 0 for tau in range(a.period)
    )
