"""Elementary number theory over machine-checkable odd prime powers.

Everything here is exact integer arithmetic. Moduli are restricted so that
q**2 stays below 2**63, which keeps every intermediate product in a single
machine word on mainstream CPython builds and bounds the exhaustive searches
downstream at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "WIDTH_LIMIT",
    "Modulus",
    "is_prime",
    "factorize",
    "euler_phi",
    "multiplicative_order",
    "is_primitive_root",
    "primitive_roots",
    "eligible_moduli",
]

# Largest allowed q*q; q above ~3.03e9 is rejected at Modulus construction.
WIDTH_LIMIT = 2**63


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (6k +- 1 wheel).

    Adequate for the q < 2**31.5 range this package admits.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Return the prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: expected a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1."""
    if n < 1:
        raise ValueError(f"phi undefined for {n}")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)*, i.e. least k >= 1 with a**k = 1 mod m.

    Starts from phi(m) and strips prime factors while the power stays 1,
    so the cost is a handful of modular exponentiations rather than a scan.
    """
    if m < 2:
        raise ValueError(f"order undefined modulo {m}")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    k = euler_phi(m)
    for p in factorize(k):
        while k % p == 0 and pow(a, k // p, m) == 1:
            k //= p
    return k


def is_primitive_root(a: int, q: int, phi: int | None = None) -> bool:
    """Is a a generator of (Z/qZ)*?

    Only meaningful when the unit group is cyclic; callers here always pass
    an odd prime power. Checks a**(phi/l) != 1 for each prime l dividing phi.
    """
    a %= q
    if q < 3 or math.gcd(a, q) != 1:
        return False
    if phi is None:
        phi = euler_phi(q)
    return all(pow(a, phi // l, q) != 1 for l in factorize(phi))


@dataclass(frozen=True)
class Modulus:
    """An odd prime power q = p**e with its derived constants.

    Attributes:
        p: odd prime base.
        e: exponent, e >= 1.
        q: p**e.
        phi: order of the unit group, p**(e-1) * (p-1).
        t0: multiplicative order of 2 modulo q.
        two_primitive: whether 2 generates the unit group (t0 == phi).
    """

    p: int
    e: int
    q: int
    phi: int
    t0: int
    two_primitive: bool

    @classmethod
    def from_pe(cls, p: int, e: int) -> "Modulus":
        if e < 1:
            raise ValueError(f"exponent must be >= 1, got {e}")
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        q = p**e
        if q * q >= WIDTH_LIMIT:
            raise ValueError(f"q={q} too large: q*q must stay below 2**63")
        phi = p ** (e - 1) * (p - 1)
        t0 = multiplicative_order(2, q)
        return cls(p=p, e=e, q=q, phi=phi, t0=t0, two_primitive=(t0 == phi))

    @classmethod
    def from_q(cls, q: int) -> "Modulus":
        if q < 3 or q % 2 == 0:
            raise ValueError(f"{q} is not an odd prime power")
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        ((p, e),) = fac.items()
        return cls.from_pe(p, e)

    def require_two_primitive(self) -> None:
        if not self.two_primitive:
            raise ValueError(f"2 is not a primitive root modulo {self.q}")


def primitive_roots(q: int) -> list[int]:
    """All primitive roots of an odd prime power q, ascending.

    Exhaustive scan of 1..q-1; fine at desk scale (q < 2**31.5 is admitted
    but callers in this package stay far smaller).
    """
    mod = Modulus.from_q(q)
    phi = mod.phi
    primes = tuple(factorize(phi))
    out = []
    for a in range(2, q):
        if a % mod.p == 0:
            continue
        if all(pow(a, phi // l, q) != 1 for l in primes):
            out.append(a)
    return out


def eligible_moduli(max_q: int, e_filter: int | None = None) -> list[Modulus]:
    """All moduli q = p**e <= max_q with 2 a primitive root, ascending by q.

    e_filter, when given, keeps only moduli with that exact exponent.
    """
    if e_filter is not None and e_filter < 1:
        raise ValueError(f"e filter must be >= 1, got {e_filter}")
    found = []
    for q in range(3, max_q + 1, 2):
        fac = factorize(q)
        if len(fac) != 1:
            continue
        ((p, e),) = fac.items()
        if p == 2:
            continue
        if e_filter is not None and e != e_filter:
            continue
        mod = Modulus.from_pe(p, e)
        if mod.two_primitive:
            found.append(mod)
    return found
