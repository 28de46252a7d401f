"""Existence table for constant-diagonal conference matrices.

Every constant-diagonal weighing matrix is circulant or negacyclic, so a
conference matrix of order ``n`` with constant diagonals exists exactly when
``CW(n, n-1)`` or ``NW(n, n-1)`` does. Both classes are searched for every
order, even though circulant conference matrices are known not to exist for
``n > 2``; an unexpected hit would expose a search bug. Runtime grows roughly
like ``3**n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import RowSpec
from .numbertheory import is_odd_prime_power
from .search import CapExceeded, SearchOptions, search_circulant, search_negacyclic

DEFAULT_MAX_N = 14
SURVEY_CAP = 26


@dataclass(frozen=True)
class SurveyRow:
    n: int
    predicted: bool
    cw_found: bool
    nw_found: bool
    witness: Optional[RowSpec]

    @property
    def verdict(self) -> str:
        return "exists" if (self.cw_found or self.nw_found) else "not_exists"


def survey_row(n, backend=None) -> SurveyRow:
    first = SearchOptions(limit=1)
    cw = search_circulant(n, n - 1, first, backend=backend)
    nw = search_negacyclic(n, n - 1, first, backend=backend)
    witness = (nw.rows or cw.rows or [None])[0]
    return SurveyRow(n, is_odd_prime_power(n - 1), cw.count > 0, nw.count > 0, witness)


def conference_survey(n_max=DEFAULT_MAX_N, backend=None) -> list:
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if n_max > SURVEY_CAP:
        raise CapExceeded(f"survey is capped at n={SURVEY_CAP}")
    return [survey_row(n, backend) for n in range(3, n_max + 1)]


def format_table(rows) -> str:
    yn = {True: "yes", False: "no"}
    lines = ["\t".join(("n", "predicted", "cw", "nw", "verdict", "witness"))]
    for r in rows:
        lines.append("\t".join((str(r.n), yn[r.predicted], yn[r.cw_found], yn[r.nw_found],
                                r.verdict, str(r.witness) if r.witness else "-")))
    return "\n".join(lines) + "\n"
