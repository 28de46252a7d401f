"""Ternary matrices, Gram verification, structured expansions and predicates.

Conventions
-----------
Public indices in reports and docs are 1-based (``a_{ij}`` with
``1 <= i, j <= n``). Storage is a read-only 0-based ``int8`` array.

"Hankel" here follows the constant-diagonal convention, ``a_{ij} =
a_{i-1,j-1}``, which is usually called Toeplitz. Matrices with constant skew
diagonals (the conventional Hankel form) are tested by
:func:`is_constant_skew_diagonal` and converted with :func:`reverse_rows`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SYMBOLS = {"+": 1, "-": -1, "0": 0}
CHARS = {1: "+", -1: "-", 0: "0"}


class FormatError(ValueError):
    """Malformed matrix file or row-spec string."""


def _ternary(values, what):
    arr = np.array(values, dtype=np.int64)
    if arr.size and not np.isin(arr, (-1, 0, 1)).all():
        raise ValueError(f"{what} entries must be -1, 0 or +1")
    return arr.astype(np.int8)


class TernaryMatrix:
    """Immutable square matrix with entries in {-1, 0, +1}."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = _ternary(entries, "matrix")
        if a.ndim == 1:
            n = int(round(np.sqrt(a.size)))
            if n * n != a.size:
                raise ValueError(f"flat entries of length {a.size} are not a square")
            a = a.reshape(n, n)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
        a.setflags(write=False)
        self._a = a

    @property
    def order(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major entries."""
        return tuple(int(x) for x in self._a.ravel())

    @property
    def array(self) -> np.ndarray:
        """Read-only ``(n, n)`` int8 view."""
        return self._a

    def __getitem__(self, ij):
        i, j = ij
        return int(self._a[i - 1, j - 1])

    def rows(self):
        return [tuple(int(x) for x in r) for r in self._a]

    def transpose(self) -> TernaryMatrix:
        return TernaryMatrix(self._a.T)

    def __neg__(self) -> TernaryMatrix:
        return TernaryMatrix(-self._a)

    def __eq__(self, other):
        if not isinstance(other, TernaryMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self):
        return hash((self.order, self._a.tobytes()))

    def __repr__(self):
        return f"TernaryMatrix({format_matrix(self).strip()!r})"


@dataclass(frozen=True, order=True)
class RowSpec:
    """First row of a circulant or negacyclic matrix.

    For the negacyclic ring the entries are the coefficients ``c_0..c_{n-1}``
    of a polynomial in the shift matrix ``Y`` with ``Y^n = -I``. Ordering is
    lexicographic with ``-1 < 0 < +1``, matching ``'-' < '0' < '+'``.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in _ternary(self.entries, "row"))
        if not vals:
            raise ValueError("row spec must have length >= 1")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def parse(cls, text: str) -> RowSpec:
        if not text:
            raise FormatError("empty row spec")
        bad = set(text) - set(SYMBOLS)
        if bad:
            raise FormatError(f"row spec has invalid characters {''.join(sorted(bad))!r}")
        return cls(tuple(SYMBOLS[c] for c in text))

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "".join(CHARS[x] for x in self.entries)

    @property
    def weight(self) -> int:
        return sum(1 for x in self.entries if x)

    def as_array(self):
        return np.array(self.entries, dtype=np.int8)


@dataclass(frozen=True)
class ToeplitzSpec:
    """First row and first column of a constant-diagonal matrix.

    ``first_row[0]`` and ``first_col[0]`` are the same corner entry, so a spec
    has ``2n - 1`` free entries.
    """

    first_row: tuple[int, ...]
    first_col: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in _ternary(self.first_row, "first_row"))
        c = tuple(int(x) for x in _ternary(self.first_col, "first_col"))
        if not r or len(r) != len(c):
            raise ValueError("first_row and first_col must have the same nonzero length")
        if r[0] != c[0]:
            raise ValueError("first_row[0] and first_col[0] must agree (shared corner)")
        object.__setattr__(self, "first_row", r)
        object.__setattr__(self, "first_col", c)

    @property
    def order(self):
        return len(self.first_row)

    @classmethod
    def from_matrix(cls, A: TernaryMatrix) -> ToeplitzSpec:
        a = A.array
        return cls(tuple(a[0]), tuple(a[:, 0]))


@dataclass(frozen=True)
class VerificationReport:
    is_weighing: bool
    weight: int
    # ((i, j), inner product) with 1-based i <= j
    gram_defects: list = field(default_factory=list)


def gram_check(A: TernaryMatrix) -> VerificationReport:
    """Test ``A A^T = k I`` exactly and report every failing row pair.

    The reference weight is the squared norm of row 1. A diagonal defect is a
    row whose squared norm differs from it, or any zero row.
    """
    a = A.array.astype(np.int64)
    G = a @ a.T
    n = A.order
    k = int(G[0, 0])
    defects = []
    for i in range(n):
        for j in range(i, n):
            g = int(G[i, j])
            if i == j:
                bad = g != k or g == 0
            else:
                bad = g != 0
            if bad:
                defects.append(((i + 1, j + 1), g))
    ok = not defects
    return VerificationReport(ok, k if ok else 0, defects)


def _as_row(r) -> np.ndarray:
    if isinstance(r, RowSpec):
        return r.as_array()
    if isinstance(r, str):
        return RowSpec.parse(r).as_array()
    return RowSpec(tuple(r)).as_array()


def _shift_matrix(r, ring):
    # row i+1 is the right shift of row i, wrapped entry multiplied by ring
    r = _as_row(r).astype(np.int64)
    n = r.size
    ext = np.concatenate([ring * r, r])
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return TernaryMatrix(ext[n + j - i])


def expand_circulant(r) -> TernaryMatrix:
    """Circulant matrix whose rows are successive right cyclic shifts of ``r``."""
    return _shift_matrix(r, 1)


def expand_negacyclic(c) -> TernaryMatrix:
    """``sum_j c_j Y^j``: right shifts of ``c`` with the wrapped entry negated."""
    return _shift_matrix(c, -1)


def expand_toeplitz(s: ToeplitzSpec) -> TernaryMatrix:
    n = s.order
    vec = np.array(s.first_row + s.first_col[1:], dtype=np.int8)
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return TernaryMatrix(vec[np.where(j >= i, j - i, n - 1 + i - j)])


def shift_matrix_Y(n) -> TernaryMatrix:
    """The negacyclic shift: ones on the superdiagonal and ``-1`` bottom-left."""
    Y = np.eye(n, k=1, dtype=np.int8)
    Y[n - 1, 0] = -1
    if n == 1:
        Y[0, 0] = -1
    return TernaryMatrix(Y)


def is_constant_diagonal(A: TernaryMatrix) -> bool:
    a = A.array
    return bool(np.array_equal(a[1:, 1:], a[:-1, :-1]))


def is_constant_skew_diagonal(A: TernaryMatrix) -> bool:
    a = A.array
    return bool(np.array_equal(a[1:, :-1], a[:-1, 1:]))


def wrap_pairs(A: TernaryMatrix):
    """``(a_{i,1}, a_{i-1,n})`` for ``i = 2..n``."""
    a = A.array
    return [(int(a[i, 0]), int(a[i - 1, -1])) for i in range(1, A.order)]


def is_circulant(A: TernaryMatrix) -> bool:
    return is_constant_diagonal(A) and all(x == y for x, y in wrap_pairs(A))


def is_negacyclic(A: TernaryMatrix) -> bool:
    return is_constant_diagonal(A) and all(x == -y for x, y in wrap_pairs(A))


def reverse_rows(A: TernaryMatrix) -> TernaryMatrix:
    return TernaryMatrix(A.array[::-1])


def periodic_autocorrelation(r) -> tuple[int, ...]:
    """``c_s = sum_j r_j r_{(j+s) mod n}`` for ``s = 0..n-1``."""
    x = _as_row(r).astype(np.int64)
    return tuple(int(x @ np.roll(x, -s)) for s in range(x.size))


def negaperiodic_autocorrelation(r) -> tuple[int, ...]:
    """Like the periodic version, but products that wrap past the end are negated."""
    x = _as_row(r).astype(np.int64)
    n = x.size
    ext = np.concatenate([x, -x])
    return tuple(int(x @ ext[s:s + n]) for s in range(n))


# ---------------------------------------------------------------------------
# text format


def parse_matrix(text: str) -> TernaryMatrix:
    """Read the ``+``/``-``/``0`` text format.

    Leading lines starting with ``#`` are comments. Each of the ``n`` rows
    holds exactly ``n`` symbols and ends with a line feed; the final line
    feed may be omitted.
    """
    if not text:
        raise FormatError("empty input")
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    while lines and lines[0].startswith("#"):
        lines.pop(0)
    if not lines:
        raise FormatError("no matrix rows")
    n = len(lines)
    rows = []
    for lineno, line in enumerate(lines, 1):
        if line.startswith("#"):
            raise FormatError(f"row {lineno}: comment inside matrix body")
        bad = set(line) - set(SYMBOLS)
        if bad:
            raise FormatError(f"row {lineno}: invalid characters {''.join(sorted(bad))!r}")
        if len(line) != n:
            raise FormatError(f"row {lineno}: expected {n} symbols, got {len(line)}")
        rows.append([SYMBOLS[c] for c in line])
    return TernaryMatrix(rows)


def format_matrix(A: TernaryMatrix, comments=()) -> str:
    out = [f"# {c}\n" if not c.startswith("#") else c + "\n" for c in comments]
    for row in A.array:
        out.append("".join(CHARS[int(x)] for x in row) + "\n")
    return "".join(out)


def read_matrix(path) -> TernaryMatrix:
    with open(path, "r", encoding="ascii", newline="") as fh:
        try:
            return parse_matrix(fh.read())
        except UnicodeDecodeError as exc:
            raise FormatError("non-ASCII input") from exc


def write_matrix(path, A: TernaryMatrix, comments=()):
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(format_matrix(A, comments))
