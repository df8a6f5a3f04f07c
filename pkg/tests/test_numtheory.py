"""Number theory: brute-force oracles first, frozen values asserted alongside."""

import random
from fractions import Fraction
from math import gcd, isqrt

import pytest

from normcov.numtheory import (
    Interval,
    _phi_interval_moebius,
    _phi_interval_scan,
    a_of_n,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    moebius,
    nu,
    p0_of_n,
    phi_interval,
    squarefree_divisors,
    totient_report,
)

SEED = 987123
print(f"test_numtheory random seed = {SEED}")


# --- independent oracles ---------------------------------------------------


def brute_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def brute_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))


def brute_prime_factors(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if n % p == 0 and brute_prime(p)]


def brute_moebius(n: int) -> int:
    if any(n % (p * p) == 0 for p in brute_prime_factors(n)):
        return 0
    return -1 if len(brute_prime_factors(n)) % 2 else 1


def brute_phi_interval(iv: Interval, n: int) -> int:
    return sum(1 for i in range(1, n + 1) if iv.contains(i) and gcd(i, n) == 1)


# --- totients, moebius, nu ---------------------------------------------------


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert brute_phi(45) == 24
    assert euler_phi(45) == 24
    assert brute_phi(12) == 4
    assert euler_phi(12) == 4


def test_euler_phi_matches_bruteforce():
    for n in range(1, 300):
        assert euler_phi(n) == brute_phi(n)


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(12) == 0  # 4 | 12
    assert brute_moebius(30) == -1
    assert moebius(30) == -1


def test_nu_examples():
    assert nu(1) == 0
    assert brute_prime_factors(12) == [2, 3]
    assert nu(12) == 2
    assert brute_prime_factors(840) == [2, 3, 5, 7]
    assert nu(840) == 4


def test_domain_errors():
    for fn in (euler_phi, moebius, nu, a_of_n, p0_of_n, factorize):
        with pytest.raises(ValueError):
            fn(0)


def test_squarefree_divisor_count():
    for n in range(1, 500):
        sf = squarefree_divisors(n)
        assert len(sf) == 2 ** nu(n)
        assert all(brute_moebius(d) != 0 for d in sf)


def test_moebius_divisor_identities():
    for n in range(1, 300):
        total = sum(moebius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0)
        assert sum(Fraction(moebius(d), d) for d in divisors(n)) == Fraction(euler_phi(n), n)


def test_totient_report():
    rep = totient_report(12)
    assert (rep.n, rep.phi, rep.nu, rep.mu) == (12, 4, 2, 0)


# --- intervals ---------------------------------------------------------------


def test_interval_parse_and_str():
    iv = Interval.parse("[2,11/2)")
    assert iv.lo == 2 and iv.hi == Fraction(11, 2)
    assert not iv.lo_open and iv.hi_open
    assert str(iv) == "[2,11/2)"
    iv2 = Interval.parse("(1,8]")
    assert iv2.lo_open and not iv2.hi_open


def test_interval_integers():
    iv = Interval(Fraction(1), Fraction(3))  # [1, 3)
    assert iv.first_integer() == 1 and iv.last_integer() == 2
    iv = Interval(Fraction(1), Fraction(3), lo_open=True, hi_open=False)  # (1, 3]
    assert iv.first_integer() == 2 and iv.last_integer() == 3
    iv = Interval(Fraction(1, 2), Fraction(5, 2))
    assert iv.first_integer() == 1 and iv.last_integer() == 2
    assert iv.contains(2) and not iv.contains(3)


def test_interval_invalid():
    with pytest.raises(ValueError):
        Interval(Fraction(3), Fraction(1))
    with pytest.raises(ValueError):
        Interval(Fraction(-1), Fraction(1))
    with pytest.raises(ValueError):
        Interval.parse("1,3")


# --- phi over intervals ------------------------------------------------------


def test_phi_interval_examples():
    iv = Interval(Fraction(2), Fraction(11, 2))
    assert brute_phi_interval(iv, 11) == 4
    assert phi_interval(iv, 11) == 4
    assert phi_interval(iv, 11) == euler_phi(11) // 2 - 1

    iv = Interval(Fraction(1), Fraction(2))
    assert phi_interval(iv, 7) == 1  # only i = 1

    iv = Interval(Fraction(1), Fraction(18, 9))
    assert brute_phi_interval(iv, 18) == 1
    assert phi_interval(iv, 18) == 1


def test_phi_interval_rejects_outside():
    with pytest.raises(ValueError):
        phi_interval(Interval(Fraction(0), Fraction(12)), 11)


def test_phi_interval_paths_agree():
    for n in range(1, 61):
        for lo2 in range(0, 2 * n, 3):
            for hi2 in range(lo2, 2 * n + 1, 5):
                iv = Interval(Fraction(lo2, 2), Fraction(hi2, 2), lo_open=bool(hi2 % 2), hi_open=bool(lo2 % 3))
                got_scan = _phi_interval_scan(iv, n)
                got_moeb = _phi_interval_moebius(iv, n)
                want = brute_phi_interval(iv, n)
                assert got_scan == got_moeb == want, (n, str(iv))


def test_phi_interval_error_bound_sampled():
    rng = random.Random(SEED)
    for n in range(1, 401):
        bound = 2 ** (nu(n) + 1)
        for _ in range(20):
            lo2 = rng.randint(0, 2 * n)
            hi2 = rng.randint(lo2, 2 * n)
            iv = Interval(Fraction(lo2, 2), Fraction(hi2, 2), lo_open=rng.random() < 0.5, hi_open=rng.random() < 0.5)
            got = phi_interval(iv, n)
            assert abs(got - Fraction(euler_phi(n), n) * iv.length) <= bound


# --- smallest non-divisors ---------------------------------------------------


def test_a_of_n_examples():
    assert a_of_n(6) == 4
    assert p0_of_n(6) == 5
    assert 3 * 5 * 7 * 8 == 840
    assert a_of_n(840) == 9
    assert a_of_n(1) == 2


def test_p0_examples():
    assert p0_of_n(1) == 2
    assert p0_of_n(30) == 7


def test_a_is_prime_power_with_gcd_property():
    for n in range(1, 2001):
        a = a_of_n(n)
        fac = factorize(a)
        assert len(fac) == 1, (n, a)
        p, alpha = fac[0]
        assert gcd(n, a) == p ** (alpha - 1)


def test_a_below_p0_with_equality_iff_prime():
    for n in range(1, 2001):
        a, p0 = a_of_n(n), p0_of_n(n)
        assert a <= p0
        assert (a == p0) == is_prime(a)


def test_a_prime_exceptions_up_to_100():
    # a(n) is non-prime exactly when n is divisible by 6 but not 4, where it
    # equals 4; below 100 that is n in {6, 18, 30, 42, 54, 66, 78, 90}
    exceptional = {n for n in range(1, 101) if not is_prime(a_of_n(n))}
    assert exceptional == {n for n in range(1, 101) if n % 12 == 6}
    assert exceptional == {6, 18, 30, 42, 54, 66, 78, 90}
    assert all(a_of_n(n) == 4 for n in exceptional)


def _twin_product(n: int) -> bool:
    for p in brute_prime_factors(n):
        if p * (p + 2) == n and brute_prime(p + 2):
            return True
    return False


def test_smallest_prime_divisor_bound_odd():
    # small prime divisor < sqrt(n) - 1, except for primes, prime squares and
    # twin-prime products where it exceeds sqrt(n) - 1
    for n in range(3, 2001, 2):
        p = brute_prime_factors(n)[0]
        exceptional = brute_prime(n) or (p * p == n) or _twin_product(n)
        if exceptional:
            assert (p + 1) ** 2 > n, n
        else:
            assert (p + 1) ** 2 < n, n


def test_p0_bound_for_multiples_of_four():
    # p0(n) <= sqrt(n) - 1 for 4 | n, n >= 16, except n = 24 and n = 60
    # (p0(60) = 7 > sqrt(60) - 1); sharp at n = 36
    hits_sharp = []
    violations = []
    for n in range(16, 2001, 4):
        p0 = p0_of_n(n)
        if (p0 + 1) ** 2 > n:
            violations.append(n)
        elif (p0 + 1) ** 2 == n:
            hits_sharp.append(n)
    assert violations == [24, 60]
    assert 36 in hits_sharp


def test_composite_coprime_exists_above_30():
    # for n > 30 there is a composite m with 1 < m < n and gcd(m, n) = 1
    for n in range(31, 1001):
        assert any(
            not brute_prime(m) and gcd(m, n) == 1 for m in range(4, n)
        ), n
