import pytest
from hypothesis import given
from hypothesis import strategies as st

from lseqkit.numtheory import (
    Modulus,
    eligible_moduli,
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    primitive_roots,
)
from oracles import brute_order


def test_is_prime_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in primes)


def test_factorize():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(9973) == {9973: 1}
    assert factorize(2 * 3 * 5 * 7 * 11) == {2: 1, 3: 1, 5: 1, 7: 1, 11: 1}
    with pytest.raises(ValueError):
        factorize(0)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 9, 10, 27, 49)] == [1, 1, 6, 4, 18, 42]
    with pytest.raises(ValueError):
        euler_phi(0)


def test_multiplicative_order_frozen():
    assert multiplicative_order(2, 9) == 6
    assert multiplicative_order(1, 7) == 1
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(ValueError):
        multiplicative_order(3, 9)
    with pytest.raises(ValueError):
        multiplicative_order(2, 1)


@given(st.sampled_from([3, 5, 7, 9, 11, 25, 27, 33, 45, 49, 121]), st.integers(1, 120))
def test_multiplicative_order_matches_brute_force(m, a):
    import math

    a = a % m
    if a == 0 or math.gcd(a, m) != 1:
        return
    k = multiplicative_order(a, m)
    assert k == brute_order(a, m)
    assert pow(a, k, m) == 1
    assert euler_phi(m) % k == 0


def test_primitive_roots_frozen():
    assert primitive_roots(5) == [2, 3]
    assert primitive_roots(9) == [2, 5]
    assert primitive_roots(27) == [2, 5, 11, 14, 20, 23]
    assert primitive_roots(3) == [2]


def test_is_primitive_root():
    assert is_primitive_root(2, 9)
    assert not is_primitive_root(4, 9)
    assert not is_primitive_root(3, 9)
    assert not is_primitive_root(1, 5)


def test_modulus_from_q():
    mod = Modulus.from_q(9)
    assert (mod.p, mod.e, mod.q, mod.phi, mod.t0) == (3, 2, 9, 6, 6)
    assert mod.two_primitive
    mod7 = Modulus.from_q(7)
    assert (mod7.t0, mod7.two_primitive) == (3, False)
    with pytest.raises(ValueError):
        mod7.require_two_primitive()


def test_modulus_rejects_bad_inputs():
    for bad in (1, 2, 4, 15, 10, 45):
        with pytest.raises(ValueError):
            Modulus.from_q(bad)
    with pytest.raises(ValueError):
        Modulus.from_pe(9, 1)
    with pytest.raises(ValueError):
        Modulus.from_pe(3, 0)


def test_modulus_width_guard():
    # 2**31 - 1 is prime and fits; its square as a modulus does not.
    big = 2**31 - 1
    assert Modulus.from_pe(big, 1).q == big
    with pytest.raises(ValueError):
        Modulus.from_pe(big, 2)


def test_eligible_moduli_frozen():
    assert [m.q for m in eligible_moduli(30)] == [3, 5, 9, 11, 13, 19, 25, 27, 29]
    assert [m.q for m in eligible_moduli(4)] == [3]
    assert [m.q for m in eligible_moduli(30, e_filter=2)] == [9, 25]
    assert [m.q for m in eligible_moduli(2)] == []
    with pytest.raises(ValueError):
        eligible_moduli(30, e_filter=0)


def test_eligible_moduli_means_two_generates():
    for mod in eligible_moduli(100):
        assert mod.t0 == mod.phi
        assert brute_order(2, mod.q) == mod.phi
