import pytest

import oracle
from fflseries.algebra import APoly, TPoly, field_make
from fflseries.powersums import (DigitVector, boeckle_degree, phi_degree, power_sum, q_length, sheats_test,
                                 twisted_power_sum)

F2, F3, F4, F5 = field_make(2), field_make(3), field_make(2, 2), field_make(5)


def test_power_sum_examples():
    assert power_sum(F2, 1, 1) == APoly.one(F2)
    assert power_sum(F3, 1, 1).is_zero()
    assert power_sum(F3, 1, 2) == APoly.constant(F3, 2)


def test_twisted_examples():
    th, t = APoly.theta(F3), TPoly.t(F3)
    for beta, k in [(0, 0), (3, 5), (1, 1)]:
        assert twisted_power_sum(F4, 0, beta, k) == TPoly.one(F4)
    assert twisted_power_sum(F3, 1, 1, 1) == TPoly.constant(F3, 2)
    assert twisted_power_sum(F3, 1, 1, 2) == th + 2 * t
    assert twisted_power_sum(F4, 1, 1, 1).is_zero()


@pytest.mark.parametrize("f,top", [(F2, 3), (F3, 2), (F4, 2), (F5, 1)], ids=str)
def test_twisted_power_sum_matches_oracle(f, top):
    ref = oracle.GF(f.p, f.e)
    for d in range(top + 1):
        for beta in range(4):
            for k in range(0, 9, 2):
                got = oracle.from_array(ref, twisted_power_sum(f, d, beta, k).array)
                assert got == oracle.twisted_power_sum(ref, d, beta, k), (d, beta, k)


def test_large_exponent_route_agrees():
    # exponents above the batched table use a per-monic loop
    ref = oracle.GF(3)
    got = oracle.from_array(ref, twisted_power_sum(F3, 1, 100, 2).array)
    assert got == oracle.twisted_power_sum(ref, 1, 100, 2)
    assert power_sum(F3, 2, 120) == twisted_power_sum(F3, 2, 0, 120).specialize_t(APoly.zero(F3))


def test_digit_helpers():
    assert q_length(5, 3) == 3
    assert q_length(9, 3) == 1
    assert q_length(8, 2) == 1
    dv = DigitVector.of(47, 4)
    assert dv.value == 47 and all(0 <= x < 4 for x in dv.digits)
    with pytest.raises(ValueError):
        q_length(0, 3)


def test_phi_examples():
    assert phi_degree(F3, 1, 1) == 1
    assert phi_degree(F4, 1, 1) == 0
    assert phi_degree(F3, 2, 2) == 2


def test_sheats_examples():
    assert sheats_test(F3, 1, 1) is False
    assert sheats_test(F3, 1, 2) is True
    assert sheats_test(F2, 1, 1) is True


def test_boeckle_examples():
    assert boeckle_degree(F3, 1) == 0
    assert boeckle_degree(F3, 2) == 1
    assert boeckle_degree(F4, 2) == 0


def _sheats_brute(f, d, k):
    """Enumerate all (i_0..i_d) with the stated digit conditions."""
    p, m = f.p, f.q - 1

    def no_carry(parts):
        total = 0
        for x in parts:
            a, b = total, x
            while a or b:
                if a % p + b % p >= p:
                    return False
                a //= p
                b //= p
            total += x
        return True

    def rec(j, remaining, acc):
        if j == d:
            return no_carry(acc + [remaining])
        for i in range(m, remaining + 1, m):
            if rec(j + 1, remaining - i, acc + [i]):
                return True
        return False

    return rec(0, k, [])


@pytest.mark.parametrize("f", [F2, F3, F4], ids=str)
def test_sheats_against_enumeration(f):
    for d in range(3):
        for k in range(1, 41):
            assert sheats_test(f, d, k) == _sheats_brute(f, d, k), (d, k)


@pytest.mark.parametrize("f", [F2, F3, F4], ids=str)
def test_sheats_equivalence(f):
    for d in range(3):
        for k in range(1, 41):
            assert sheats_test(f, d, k) == (not power_sum(f, d, k).is_zero()), (d, k)


@pytest.mark.parametrize("f", [F2, F3, F4], ids=str)
def test_boeckle_is_last_nonzero_degree(f):
    for k in range(1, 31):
        bound = boeckle_degree(f, k)
        nonzero = [d for d in range(bound + 3) if not power_sum(f, d, k).is_zero()]
        assert max(nonzero) == bound, k


@pytest.mark.parametrize("f", [F2, F3], ids=str)
def test_specialization(f):
    th = APoly.theta(f)
    for d in range(3):
        for beta in range(7):
            for k in range(7):
                m = 0
                while f.q**m <= k:
                    m += 1
                lhs = twisted_power_sum(f, d, beta, k).specialize_t(th ** (f.q**m))
                assert lhs == power_sum(f, d, f.q**m * beta + k), (d, beta, k, m)


@pytest.mark.parametrize("f", [F2, F3, F4, F5], ids=str)
def test_vanishing_bound(f):
    q = f.q
    for d in range(1, 3):
        for beta in range(1, q**2 + 1):
            length = q_length(beta, q)
            if length >= q:
                continue
            for k in range(max(q**d - q ** (d - 1) * length - 1, 0)):
                assert twisted_power_sum(f, d, beta, k).is_zero(), (d, beta, k)


@pytest.mark.parametrize("f", [F2, F3, F4, F5], ids=str)
def test_beta_zero_is_the_plain_power_sum(f):
    for d in range(3):
        for k in range(12):
            assert twisted_power_sum(f, d, 0, k) == power_sum(f, d, k).embed(TPoly)
