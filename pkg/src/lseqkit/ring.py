"""Primitive sequences over Z/(p**e) and their p-adic level decomposition.

A primitive sequence u(t) = A * xi**t mod p**e (xi a primitive root, A a
unit) is studied through its base-p digit rows: level i is the sequence of
i-th digits of u(t). The highest level carries the distinguishing power of
the modulo-2 projection, and its behaviour under shifts by the block length
B = p**(e-2) * (p-1) is linear with slope alpha(t) = h_f * u(t) mod p for a
nonzero constant h_f depending only on p**e and xi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .fcsr import BinarySequence
from .numtheory import Modulus, is_prime, is_primitive_root

__all__ = [
    "ResidueSequence",
    "generate",
    "compute_hf",
    "alpha_sequence",
    "LevelStructure",
    "level_structure",
    "prop2_witness",
    "check_prop2",
    "mod2_projection",
    "Lemma2Instance",
    "find_distinguishing_j",
    "lemma2_brute_force",
    "check_lemma1",
    "highest_level_mod2_witness",
    "Lemma4Result",
    "LEMMA4_NOT_APPLICABLE",
    "LEMMA4_HOLDS",
    "LEMMA4_VIOLATED",
    "check_lemma4",
]


@dataclass(frozen=True)
class ResidueSequence:
    """One period of u(t) = a_seed * xi**t mod q with its digit rows.

    levels[i][t] is the coefficient of p**i in the base-p expansion of
    values[t]. Construction performs no validation so that tests can build
    deliberately broken instances as negative controls; generate() is the
    validated entry point.
    """

    mod: Modulus
    xi: int
    a_seed: int
    values: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]

    @property
    def period(self) -> int:
        return len(self.values)

    def top_level(self) -> tuple[int, ...]:
        return self.levels[-1]


def generate(q: int | Modulus, xi: int, a_seed: int = 1) -> ResidueSequence:
    """Build the full-period primitive sequence a_seed * xi**t mod q.

    xi must be a primitive root modulo q and a_seed a unit; the stored
    period is phi(q), the order of the unit group.
    """
    mod = q if isinstance(q, Modulus) else Modulus.from_q(q)
    xi %= mod.q
    if not is_primitive_root(xi, mod.q, mod.phi):
        raise ValueError(f"{xi} is not a primitive root modulo {mod.q}")
    a_seed %= mod.q
    if a_seed % mod.p == 0:
        raise ValueError(f"seed must be a unit modulo {mod.q}")
    values = []
    x = a_seed
    for _ in range(mod.phi):
        values.append(x)
        x = x * xi % mod.q
    p = mod.p
    levels = tuple(
        tuple(v // p**i % p for v in values) for i in range(mod.e)
    )
    return ResidueSequence(
        mod=mod, xi=xi, a_seed=a_seed, values=tuple(values), levels=levels
    )


def compute_hf(mod: Modulus, xi: int) -> int:
    """The slope constant h_f of xi over Z/(p**e), for e >= 2.

    For each level i in 1..e-1 the power xi**(p**(i-1) * (p-1)) is 1 modulo
    p**i, so modulo p**(i+1) it reads 1 + h_i * p**i; all the h_i agree and
    are nonzero, and that common value is returned. Disagreement or a zero
    would contradict primitivity and raises InvariantViolation.
    """
    if mod.e < 2:
        raise ValueError(f"h_f needs e >= 2, got q={mod.q}")
    xi %= mod.q
    if not is_primitive_root(xi, mod.q, mod.phi):
        raise ValueError(f"{xi} is not a primitive root modulo {mod.q}")
    p = mod.p
    hs = []
    for i in range(1, mod.e):
        s = pow(xi, p ** (i - 1) * (p - 1), p ** (i + 1))
        if (s - 1) % p**i != 0:
            raise InvariantViolation(
                f"xi={xi}, q={mod.q}: power not 1 modulo p**{i}"
            )
        hs.append((s - 1) // p**i % p)
    h = hs[0]
    if h == 0 or any(other != h for other in hs[1:]):
        raise InvariantViolation(
            f"xi={xi}, q={mod.q}: level slopes {hs} not equal and nonzero"
        )
    return h


def alpha_sequence(u: ResidueSequence, h_f: int | None = None) -> tuple[int, ...]:
    """alpha(t) = h_f * u(t) mod p for t in one period p-1 of the base row.

    Every entry is nonzero because h_f is nonzero and u(t) is a unit; a zero
    entry raises InvariantViolation.
    """
    if h_f is None:
        h_f = compute_hf(u.mod, u.xi)
    p = u.mod.p
    out = tuple(h_f * (v % p) % p for v in u.values[: p - 1])
    if any(a == 0 for a in out):
        raise InvariantViolation(f"alpha has a zero entry: {out}")
    return out


@dataclass(frozen=True)
class LevelStructure:
    """The slope constant and slope sequence of a primitive sequence."""

    h_f: int
    alpha: tuple[int, ...]


def level_structure(u: ResidueSequence) -> LevelStructure:
    h = compute_hf(u.mod, u.xi)
    return LevelStructure(h_f=h, alpha=alpha_sequence(u, h))


def prop2_witness(u: ResidueSequence) -> tuple[int, int] | None:
    """Check the block-shift law of the top digit row; None means it holds.

    With B = p**(e-2) * (p-1), the top row satisfies
    u_top(t + j*B) = u_top(t) + j * alpha(t) (mod p) for 0 <= j < p, and in
    particular {u_top(t + j*B) : j} is all of Z/p. Returns the first failing
    (t, j), or (t, p) if the congruences pass at t but the residue set is
    short (possible only if the instance was built by hand), or None.
    """
    mod = u.mod
    if mod.e < 2:
        raise ValueError(f"block-shift law needs e >= 2, got q={mod.q}")
    p = mod.p
    block = p ** (mod.e - 2) * (p - 1)
    alpha = alpha_sequence(u)
    top = u.top_level()
    for t in range(block):
        a_t = alpha[t % (p - 1)]
        base = top[t]
        hit: set[int] = set()
        for j in range(p):
            got = top[t + j * block]
            if got != (base + j * a_t) % p:
                return (t, j)
            hit.add(got)
        if len(hit) != p:
            return (t, p)
    return None


def check_prop2(u: ResidueSequence) -> bool:
    return prop2_witness(u) is None


def mod2_projection(u: ResidueSequence) -> BinarySequence:
    """The parity sequence u(t) mod 2 over one full period."""
    return BinarySequence(bytes(v & 1 for v in u.values))


@dataclass(frozen=True)
class Lemma2Instance:
    """Parameters of one parity-splitting problem modulo an odd prime.

    Asks for j with (j*alpha mod p) and (delta + j*beta mod p) of opposite
    parities, where lam = alpha/beta mod p. The corner lam == 1, delta == 0
    admits no such j (the two values coincide for every j) and is rejected
    here so downstream code cannot construct it.
    """

    p: int
    lam: int
    alpha: int
    beta: int
    delta: int

    def __post_init__(self) -> None:
        p = self.p
        if p < 3 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if not (0 < self.alpha < p and 0 < self.beta < p):
            raise ValueError("alpha and beta must be nonzero residues")
        if not 1 <= self.lam <= p - 2:
            raise ValueError(f"lam must lie in 1..{p - 2}, got {self.lam}")
        if self.lam != self.alpha * pow(self.beta, -1, p) % p:
            raise ValueError("lam must equal alpha / beta modulo p")
        if not (0 <= self.delta <= p - 1 and self.delta % 2 == 0):
            raise ValueError(f"delta must be even in 0..{p - 1}, got {self.delta}")
        if self.lam == 1 and self.delta == 0:
            raise ValueError("lam == 1 with delta == 0 admits no splitting index")


def _parity_split(p: int, lam: int, delta: int, j: int) -> bool:
    """Do j*lam mod p and (delta + j) mod p have opposite parities?"""
    return (j * lam % p) % 2 != ((delta + j) % p) % 2


def _split_index(p: int, lam: int, delta: int) -> int:
    """A splitting index j* for the normalized problem (beta = 1).

    Constructive case analysis on lam and delta; every branch is justified
    by a short parity computation with p odd, delta even:

      * lam == 1, delta > 0: j* = p - delta lands on (odd, 0).
      * delta < p-1, lam even: j* = 1 gives (lam even, delta+1 odd).
      * delta < p-1, lam odd: let k1 be the least k with k*lam > p; then
        k1 works unless it collides with p - delta, where the least k with
        k*lam > 2p works instead (k1 = p - delta is odd there); and if k1
        overshoots p - delta, p - delta itself has not wrapped yet.
      * delta == p-1, lam odd: j* = 1 gives (lam odd, 0).
      * delta == p-1, lam even: at the least k whose residue keeps the next
        step from wrapping, k or k+1 splits.
    """
    if lam == 1:
        return p - delta
    if delta < p - 1:
        if lam % 2 == 0:
            return 1
        k1 = p // lam + 1
        if k1 < p - delta:
            return k1
        if k1 == p - delta:
            return 2 * p // lam + 1
        return p - delta
    if lam % 2 == 1:
        return 1
    for k in range(1, p):
        if k * lam % p < p - lam:
            if _parity_split(p, lam, delta, k):
                return k
            return k + 1
    raise InvariantViolation(f"no splitting index for p={p} lam={lam} delta={delta}")


def find_distinguishing_j(inst: Lemma2Instance) -> int:
    """The shift count j that separates the two digit rows by parity.

    Solves the normalized problem for j*, re-verifies it, and rescales by
    beta**-1 so that j*alpha mod p and (delta + j*beta) mod p are the split
    pair in the caller's coordinates.
    """
    p = inst.p
    j_star = _split_index(p, inst.lam, inst.delta)
    if not (1 <= j_star <= p - 1) or not _parity_split(p, inst.lam, inst.delta, j_star):
        raise InvariantViolation(
            f"split index {j_star} fails for p={p} lam={inst.lam} delta={inst.delta}"
        )
    return j_star * pow(inst.beta, -1, p) % p


def lemma2_brute_force(p: int, lam: int, delta: int) -> int | None:
    """Least normalized splitting index by exhaustive scan, or None."""
    for j in range(1, p):
        if _parity_split(p, lam, delta, j):
            return j
    return None


def check_lemma1(p: int, xi: int) -> bool:
    """Are the parities of A*xi**t mod p pairwise distinct over seeds A?

    For a primitive root xi modulo an odd prime p, the p-1 unit seeds give
    p-1 distinct parity streams (equivalently: the parity stream of xi**t
    has least period exactly p-1).
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    xi %= p
    if not is_primitive_root(xi, p, p - 1):
        raise ValueError(f"{xi} is not a primitive root modulo {p}")
    streams = set()
    for a in range(1, p):
        x = a
        row = bytearray(p - 1)
        for t in range(p - 1):
            row[t] = x & 1
            x = x * xi % p
        streams.add(bytes(row))
    return len(streams) == p - 1


def highest_level_mod2_witness(u: ResidueSequence, v: ResidueSequence) -> int | None:
    """Least t where the top digit rows differ modulo 2, or None."""
    if u.mod != v.mod:
        raise ValueError("sequences live over different moduli")
    ut, vt = u.top_level(), v.top_level()
    for t in range(len(ut)):
        if (ut[t] - vt[t]) % 2 != 0:
            return t
    return None


LEMMA4_NOT_APPLICABLE = "not_applicable"
LEMMA4_HOLDS = "holds"
LEMMA4_VIOLATED = "violated"


@dataclass(frozen=True)
class Lemma4Result:
    """Verdict of the opposite-slope sum law for a pair of sequences."""

    status: str
    witness_t: int | None


def check_lemma4(u: ResidueSequence, v: ResidueSequence) -> Lemma4Result:
    """When slopes are opposite and top parities agree, top rows sum to p-1.

    Applicability: alpha_u(t) + alpha_v(t) = 0 mod p for every t, and the
    top digit rows agree modulo 2 pointwise. For applicable pairs the law
    u_top(t) + v_top(t) = p - 1 (mod p) must hold at every t; the first
    failing t is reported otherwise.
    """
    if u.mod != v.mod:
        raise ValueError("sequences live over different moduli")
    if u.mod.e < 2:
        raise ValueError(f"sum law needs e >= 2, got q={u.mod.q}")
    p = u.mod.p
    au = alpha_sequence(u)
    av = alpha_sequence(v)
    opposite = all((au[t] + av[t]) % p == 0 for t in range(p - 1))
    ut, vt = u.top_level(), v.top_level()
    parities_equal = all((ut[t] - vt[t]) % 2 == 0 for t in range(len(ut)))
    if not (opposite and parities_equal):
        return Lemma4Result(status=LEMMA4_NOT_APPLICABLE, witness_t=None)
    for t in range(len(ut)):
        if (ut[t] + vt[t]) % p != p - 1:
            return Lemma4Result(status=LEMMA4_VIOLATED, witness_t=t)
    return Lemma4Result(status=LEMMA4_HOLDS, witness_t=None)
