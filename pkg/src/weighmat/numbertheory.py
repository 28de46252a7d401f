"""Trial-division factoring and prime-power tests."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p ** e
        return out


def factor(m: int) -> Factorization:
    """Canonical factorization of ``m >= 1``; ``factor(1)`` is empty."""
    if m < 1:
        raise ValueError(f"factor() needs m >= 1, got {m}")
    pairs = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def is_prime_power(m: int):
    """``(p, e)`` if ``m = p**e`` with ``e >= 1``, else ``None``. 1 is not a prime power."""
    pairs = factor(m).pairs
    return pairs[0] if len(pairs) == 1 else None


def is_odd_prime_power(m: int) -> bool:
    pp = is_prime_power(m)
    return pp is not None and pp[0] != 2
