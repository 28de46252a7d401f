import numpy as np
import pytest

from weighmat.classify import (Classification, MagnitudeMismatch, MixedSigns, NotToeplitz,
                               NotWeighing, WrapSignProfile, classify_toeplitz_weighing,
                               verdict_from_profile, wrap_sign_profile)
from weighmat.core import (TernaryMatrix, expand_circulant, expand_negacyclic, expand_toeplitz,
                           gram_check)
from weighmat.search import enumerate_toeplitz_weighing

from conftest import all_rows

I4 = TernaryMatrix(np.eye(4, dtype=int))


def test_profile_identity():
    assert wrap_sign_profile(I4).signs == (None, None, None)


def test_profile_circulant():
    assert wrap_sign_profile(expand_circulant((1, 1, 1, -1))).signs == (1, 1, 1)


def test_profile_negacyclic():
    p = wrap_sign_profile(expand_negacyclic("0++-"))
    assert p[2] == p[3] == p[4] == -1
    assert p.defined() == [(2, -1), (3, -1), (4, -1)]


def test_profile_index_bounds():
    p = wrap_sign_profile(I4)
    with pytest.raises(IndexError):
        p[1]
    with pytest.raises(IndexError):
        p[5]


def test_magnitude_mismatch():
    A = TernaryMatrix([[1, 1], [0, 1]])
    with pytest.raises(MagnitudeMismatch):
        wrap_sign_profile(A)


@pytest.mark.parametrize("A, verdict", [
    (I4, Classification.BOTH),
    (expand_circulant((1, 1, 1, -1)), Classification.CIRCULANT),
    (expand_negacyclic("0++-"), Classification.NEGACYCLIC),
])
def test_classify(A, verdict):
    assert classify_toeplitz_weighing(A) is verdict
    assert str(verdict) == verdict.value


def test_not_weighing():
    with pytest.raises(NotWeighing) as exc:
        classify_toeplitz_weighing(TernaryMatrix([[1, 1], [0, 1]]))
    assert exc.value.code == "NOT_WEIGHING"


def test_not_toeplitz():
    # a weighing matrix without constant diagonals
    with pytest.raises(NotToeplitz) as exc:
        classify_toeplitz_weighing(TernaryMatrix([[1, 1], [-1, 1]][::-1]))
    assert exc.value.code == "NOT_TOEPLITZ"


def test_mixed_signs_is_loud():
    with pytest.raises(MixedSigns) as exc:
        verdict_from_profile(WrapSignProfile((1, None, -1)))
    assert exc.value.code == "MIXED_SIGNS"


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_set_pairwise_consistency_and_symmetries(n):
    items = enumerate_toeplitz_weighing(n)
    assert items
    for item in items:
        A = expand_toeplitz(item.spec)
        signs = [e for _, e in wrap_sign_profile(A).defined()]
        assert all(a * b == 1 for a in signs for b in signs)
        assert classify_toeplitz_weighing(-A) is item.classification
        assert classify_toeplitz_weighing(A.transpose()) is item.classification


@pytest.mark.parametrize("n", range(1, 6))
def test_expansions_classify_into_their_ring(n):
    for r in all_rows(n):
        for expand, ring in ((expand_circulant, Classification.CIRCULANT),
                             (expand_negacyclic, Classification.NEGACYCLIC)):
            A = expand(r)
            if gram_check(A).is_weighing:
                assert classify_toeplitz_weighing(A) in (ring, Classification.BOTH)
