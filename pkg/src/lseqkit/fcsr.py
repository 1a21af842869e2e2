"""Binary l-sequences: three equivalent generators and 2-adic expansions.

An l-sequence modulo q (an odd prime power with 2 a primitive root) can be
produced three ways:

  * running a feedback-with-carry register with connection integer q,
  * reading off the 2-adic expansion of a rational -A/q,
  * the closed form a(t) = (A * 2**(-t) mod q) mod 2.

All three are implemented independently so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import Modulus

__all__ = [
    "BinarySequence",
    "DyadicExpansion",
    "dyadic_expansion",
    "lseq_exponential",
    "lseq_rational",
    "fcsr_run",
    "lsequence",
]

_NOT_BITS = bytes(i for i in range(256) if i > 1)


@dataclass(frozen=True)
class BinarySequence:
    """One period of a periodic binary sequence.

    bits holds one full period as a bytes object of 0/1 values; indexing is
    periodic via bit(). Equality and hashing come from the dataclass, so two
    sequences are equal exactly when their stored periods match.
    """

    bits: bytes

    def __post_init__(self) -> None:
        if len(self.bits) == 0:
            raise ValueError("empty period")
        if self.bits.translate(None, b"\x00\x01"):
            raise ValueError("bits must contain only 0 and 1 values")

    @classmethod
    def from_bits(cls, values) -> "BinarySequence":
        return cls(bytes(values))

    @classmethod
    def from01(cls, text: str) -> "BinarySequence":
        """Parse a string like '1100' into a sequence."""
        try:
            return cls(bytes(int(ch) for ch in text.strip()))
        except ValueError:
            raise ValueError(f"not a 0/1 string: {text!r}") from None

    @property
    def period(self) -> int:
        return len(self.bits)

    def bit(self, t: int) -> int:
        return self.bits[t % len(self.bits)]

    def to01(self) -> str:
        return "".join("01"[b] for b in self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class DyadicExpansion:
    """Leading coefficients of the 2-adic expansion of numerator/denominator.

    preperiod and period describe the eventual cycle structure discovered
    while expanding: bit index t >= preperiod satisfies
    bits[t] == bits[t + period].
    """

    numerator: int
    denominator: int
    bits: tuple[int, ...]
    preperiod: int
    period: int


def dyadic_expansion(numerator: int, denominator: int, count: int) -> DyadicExpansion:
    """First `count` coefficients of the 2-adic expansion of a rational.

    The denominator must be odd (so the rational is a 2-adic integer times a
    unit) and count >= 1. The iteration keeps the remaining value
    u_t = (numerator - partial sum) / 2**t, emits bit u_t mod 2, and replaces
    u_t by (u_t - bit * denominator) / 2. States repeat because
    |u_t| <= |numerator| + |denominator| for all t, and the first repeat
    pins down the preperiod and period exactly.
    """
    if denominator <= 0 or denominator % 2 == 0:
        raise ValueError(f"denominator must be odd and positive, got {denominator}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    bits: list[int] = []
    seen: dict[int, int] = {}
    u = numerator
    while u not in seen:
        seen[u] = len(bits)
        b = u & 1
        bits.append(b)
        u = (u - b * denominator) >> 1
    preperiod = seen[u]
    period = len(bits) - preperiod
    while len(bits) < count:
        bits.append(bits[-period])
    return DyadicExpansion(
        numerator=numerator,
        denominator=denominator,
        bits=tuple(bits[:count]),
        preperiod=preperiod,
        period=period,
    )


def _require_lseq_modulus(mod: Modulus) -> None:
    mod.require_two_primitive()


def _require_seed(a: int, mod: Modulus) -> int:
    a %= mod.q
    if a == 0 or a % mod.p == 0:
        raise ValueError(f"seed must be a unit modulo {mod.q}")
    return a


def lseq_exponential(mod: Modulus, a: int = 1, length: int | None = None) -> BinarySequence:
    """l-sequence via the closed form a(t) = (A * 2**(-t) mod q) mod 2.

    Walks the unit group by repeated multiplication with the inverse of 2;
    no division machinery is shared with the other two generators.
    """
    _require_lseq_modulus(mod)
    a = _require_seed(a, mod)
    n = mod.phi if length is None else length
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    inv2 = pow(2, -1, mod.q)
    out = bytearray(n)
    x = a
    for t in range(n):
        out[t] = x & 1
        x = x * inv2 % mod.q
    return BinarySequence(bytes(out))


def lseq_rational(mod: Modulus, a: int = 1, length: int | None = None) -> BinarySequence:
    """l-sequence as the 2-adic expansion of -A/q (strictly periodic part)."""
    _require_lseq_modulus(mod)
    a = _require_seed(a, mod)
    n = mod.phi if length is None else length
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    exp = dyadic_expansion(-a, mod.q, n)
    if exp.preperiod != 0:
        raise RuntimeError(f"-{a}/{mod.q} expansion unexpectedly not strictly periodic")
    return BinarySequence(bytes(exp.bits))


def fcsr_run(mod: Modulus, a: int = 1, length: int | None = None) -> BinarySequence:
    """l-sequence by running the carry-feedback register with connection q.

    The register state is tracked as the single integer u_t it encodes (the
    value remaining to be emitted, times a sign); each step emits the low bit
    and performs the carry-propagating shift u <- (u - bit*q) / 2. Seeding
    with -a makes the output the expansion of -a/q.
    """
    _require_lseq_modulus(mod)
    a = _require_seed(a, mod)
    n = mod.phi if length is None else length
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    q = mod.q
    out = bytearray(n)
    u = -a
    for t in range(n):
        b = u & 1
        out[t] = b
        u = (u - b * q) >> 1
    return BinarySequence(bytes(out))


def lsequence(q: int, a: int = 1, length: int | None = None) -> BinarySequence:
    """Convenience wrapper: the l-sequence for connection integer q, seed a."""
    return lseq_exponential(Modulus.from_q(q), a, length)
