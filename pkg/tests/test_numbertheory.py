import pytest

from weighmat.numbertheory import factor, is_odd_prime_power, is_prime, is_prime_power


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p::p] = bytearray(len(flags[p * p::p]))
    return [p for p in range(limit + 1) if flags[p]]


@pytest.mark.parametrize("m, pairs", [(12, ((2, 2), (3, 1))), (1, ()), (9, ((3, 2),)),
                                      (2, ((2, 1),)), (532, ((2, 2), (7, 1), (19, 1)))])
def test_factor(m, pairs):
    assert factor(m).pairs == pairs


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor(0)


@pytest.mark.parametrize("m, expected, odd", [(9, (3, 2), True), (8, (2, 3), False),
                                              (15, None, False), (1, None, False),
                                              (3, (3, 1), True), (2, (2, 1), False)])
def test_prime_power(m, expected, odd):
    assert is_prime_power(m) == expected
    assert is_odd_prime_power(m) == odd


def test_factor_reconstructs_and_primes_are_prime():
    for m in range(1, 20001):
        f = factor(m)
        assert f.value() == m
        ps = [p for p, _ in f.pairs]
        assert ps == sorted(set(ps))
        assert all(is_prime(p) for p in ps)


@pytest.mark.slow
def test_up_to_a_million():
    limit = 10 ** 6
    primes = sieve(limit)
    powers = {}
    for p in primes:
        q, e = p, 1
        while q <= limit:
            powers[q] = (p, e)
            q *= p
            e += 1
    for m in range(1, limit + 1):
        f = factor(m)
        assert f.value() == m
        assert (f.pairs[0] if len(f.pairs) == 1 else None) == powers.get(m)
        assert is_prime_power(m) == powers.get(m)
