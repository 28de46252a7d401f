"""Negacyclic conference matrices ``NW(q+1, q)`` for odd prime powers ``q``.

Witnesses come from the first-row search rather than a finite-field
construction. The first row the search reports is the lexicographic minimum
of all solutions, hence the canonical representative of its orbit, so the
same ``q`` always yields the same row. Every witness is re-verified exactly.

``q <= 13`` is the supported range; larger ``q`` work while the pruned search
stays fast (see the README for measured times).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import RowSpec, VerificationReport, expand_negacyclic, gram_check, is_negacyclic
from .numbertheory import is_odd_prime_power
from .search import NEGACYCLIC, SearchOptions, canonicalize, search_negacyclic

SUPPORTED_MAX_Q = 13


class NotOddPrimePower(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """No witness found for a valid ``q``; indicates a search bug."""


@dataclass(frozen=True)
class ConferenceWitness:
    q: int
    row: RowSpec
    report: VerificationReport

    @property
    def matrix(self):
        return expand_negacyclic(self.row)


def negacyclic_conference(q: int, backend=None) -> ConferenceWitness:
    if not isinstance(q, int) or q < 1 or not is_odd_prime_power(q):
        raise NotOddPrimePower(f"{q} is not an odd prime power")
    res = search_negacyclic(q + 1, q, SearchOptions(limit=1), backend=backend)
    if not res.rows:
        raise SearchExhausted(f"no NW({q + 1},{q}) first row found")
    row = res.rows[0]
    if canonicalize(row, NEGACYCLIC) != row:
        raise AssertionError(f"first search hit {row} is not canonical")
    A = expand_negacyclic(row)
    report = gram_check(A)
    if not (report.is_weighing and report.weight == q and is_negacyclic(A)):
        raise AssertionError(f"witness {row} failed verification: {report}")
    if any(r.count(0) != 1 for r in A.rows()):
        raise AssertionError(f"witness {row} does not have one zero per row")
    return ConferenceWitness(q, row, report)
