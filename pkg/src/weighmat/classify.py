"""Decide whether a constant-diagonal weighing matrix is circulant or negacyclic.

In a constant-diagonal weighing matrix, row ``i`` is row ``i-1`` shifted right
with a new entry ``a_{i,1}`` entering on the left and ``a_{i-1,n}`` dropping
off the right. Equal row weights force ``|a_{i,1}| = |a_{i-1,n}|``, so each
nonzero wrap pair defines a sign ``eps_i`` with ``a_{i-1,n} = eps_i a_{i,1}``.
Orthogonality of rows ``i, t`` against rows ``i-1, t-1`` then gives
``eps_i eps_t = 1``: all defined signs agree, and the matrix is circulant
(all ``+1``) or negacyclic (all ``-1``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import TernaryMatrix, gram_check, is_constant_diagonal, wrap_pairs


class Classification(enum.Enum):
    CIRCULANT = "CIRCULANT"
    NEGACYCLIC = "NEGACYCLIC"
    BOTH = "BOTH"

    def __str__(self):
        return self.value


class ClassificationError(Exception):
    code = "ERROR"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class NotToeplitz(ClassificationError):
    code = "NOT_TOEPLITZ"


class NotWeighing(ClassificationError):
    code = "NOT_WEIGHING"


class MixedSigns(ClassificationError):
    """Defined wrap signs disagree. Unreachable for valid input."""

    code = "MIXED_SIGNS"


class MagnitudeMismatch(ClassificationError):
    code = "MAGNITUDE_MISMATCH"


@dataclass(frozen=True)
class WrapSignProfile:
    """``signs[i - 2]`` is ``eps_i`` for ``i = 2..n``; ``None`` where both wrap entries are 0."""

    signs: tuple[Optional[int], ...]

    def __getitem__(self, i: int) -> Optional[int]:
        if not 2 <= i <= len(self.signs) + 1:
            raise IndexError(f"wrap sign index {i} outside 2..{len(self.signs) + 1}")
        return self.signs[i - 2]

    def defined(self):
        """Pairs ``(i, eps_i)`` with a defined sign."""
        return [(i, e) for i, e in enumerate(self.signs, 2) if e is not None]


def wrap_sign_profile(A: TernaryMatrix) -> WrapSignProfile:
    signs = []
    for i, (first, last_above) in enumerate(wrap_pairs(A), 2):
        if abs(first) != abs(last_above):
            raise MagnitudeMismatch(
                f"|a_{{{i},1}}| = {abs(first)} but |a_{{{i - 1},n}}| = {abs(last_above)}")
        signs.append(None if first == 0 else last_above * first)
    return WrapSignProfile(tuple(signs))


def verdict_from_profile(profile: WrapSignProfile) -> Classification:
    values = {e for _, e in profile.defined()}
    if not values:
        return Classification.BOTH
    if values == {1}:
        return Classification.CIRCULANT
    if values == {-1}:
        return Classification.NEGACYCLIC
    plus = [i for i, e in profile.defined() if e == 1]
    minus = [i for i, e in profile.defined() if e == -1]
    raise MixedSigns(f"eps=+1 at i={plus}, eps=-1 at i={minus}")


def classify_toeplitz_weighing(A: TernaryMatrix) -> Classification:
    """Circulant, negacyclic or both; raises on invalid input."""
    if not is_constant_diagonal(A):
        raise NotToeplitz("diagonals are not constant")
    report = gram_check(A)
    if not report.is_weighing:
        raise NotWeighing(f"{len(report.gram_defects)} Gram defects")
    return verdict_from_profile(wrap_sign_profile(A))


classify = classify_toeplitz_weighing
