"""Dense exact rational matrices: RREF, rank, null space.

Entries are :class:`fractions.Fraction`, which is always in lowest terms
with a positive denominator. Elimination is Gauss-Jordan with pivot-row
normalisation, done row by row over sparse dict rows so that the very
sparse derivation systems stay cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MalformedInput


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` (surrounding whitespace ignored)."""
    s = text.strip()
    if not s:
        raise MalformedInput("empty rational literal")
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad rational literal {text!r}") from exc
    if "." in s or "e" in s.lower():
        raise MalformedInput(f"rational literal must be p/q or p, got {text!r}")
    return value


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


class RationalMatrix:
    """Immutable rows x cols matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative matrix dimension")
        data = tuple(x if type(x) is Fraction else Fraction(x) for x in entries)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"{len(data)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> RationalMatrix:
        return cls(len(values), 1, values)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._data

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows,
                              (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def reshape(self, rows: int, cols: int) -> RationalMatrix:
        return RationalMatrix(rows, cols, self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return mat_mul(self, other)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return RationalMatrix(self.rows, self.cols,
                              (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return RationalMatrix(self.rows, self.cols,
                              (a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, (-a for a in self._data))

    def scale(self, k) -> RationalMatrix:
        k = Fraction(k)
        return RationalMatrix(self.rows, self.cols, (k * a for a in self._data))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, self.row(i))) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def to_csv(self) -> str:
        return "".join(",".join(map(format_rational, self.row(i))) + "\n"
                       for i in range(self.rows))

    @classmethod
    def from_csv(cls, text: str) -> RationalMatrix:
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            rows.append([parse_rational(tok) for tok in line.split(",")])
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise MalformedInput("matrix CSV rows have differing lengths")
        return cls.from_rows(rows)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bt = [b.transpose().row(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        ra = a.row(i)
        for col in bt:
            out.append(sum((x * y for x, y in zip(ra, col) if x and y), Fraction(0)))
    return RationalMatrix(a.rows, b.cols, out)


def _echelon(rows: Iterable[Sequence], ncols: int) -> dict[int, dict[int, Fraction]]:
    """Fully reduced pivot rows keyed by pivot column, built incrementally."""
    pivots: dict[int, dict[int, Fraction]] = {}
    seen: set = set()
    for dense in rows:
        key = tuple((j, x) for j, x in enumerate(dense) if x)
        if not key or key in seen:
            continue
        seen.add(key)
        row = {j: x if type(x) is Fraction else Fraction(x) for j, x in key}
        # pivot rows carry no other pivot column, so one pass reduces fully
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for j, v in pivots[c].items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {j: v * inv for j, v in row.items()}
        for prow in pivots.values():
            f = prow.get(p)
            if not f:
                continue
            for j, v in row.items():
                nv = prow.get(j, 0) - f * v
                if nv:
                    prow[j] = nv
                else:
                    prow.pop(j, None)
        pivots[p] = row
    return pivots


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the strictly increasing pivot columns."""
    pivots = _echelon((m.row(i) for i in range(m.rows)), m.cols)
    cols = sorted(pivots)
    out: list[Fraction | int] = []
    for c in cols:
        r = pivots[c]
        out.extend(r.get(j, 0) for j in range(m.cols))
    out.extend([0] * ((m.rows - len(cols)) * m.cols))
    return RationalMatrix(m.rows, m.cols, out), cols


def rank(m: RationalMatrix) -> int:
    return len(_echelon((m.row(i) for i in range(m.rows)), m.cols))


def null_space(m: RationalMatrix) -> list[RationalMatrix]:
    """Kernel basis as column vectors, one per free column in ascending order.

    Each vector has its free variable set to 1, the other free variables 0,
    and the pivot variables read off the RREF.
    """
    pivots = _echelon((m.row(i) for i in range(m.rows)), m.cols)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for p, r in pivots.items():
            v = r.get(f)
            if v:
                x[p] = -v
        basis.append(RationalMatrix.column(x))
    return basis


def row_space_rref(vectors: Sequence[Sequence], ncols: int) -> RationalMatrix:
    """Canonical form of the span of ``vectors``: the nonzero rows of their RREF.

    Two families span the same subspace iff these matrices are equal.
    """
    pivots = _echelon(vectors, ncols)
    cols = sorted(pivots)
    return RationalMatrix(len(cols), ncols,
                          (pivots[c].get(j, 0) for c in cols for j in range(ncols)))


def in_span(vectors: Sequence[Sequence], candidate: Sequence, ncols: int) -> bool:
    base = row_space_rref(vectors, ncols)
    grown = row_space_rref([*(base.row(i) for i in range(base.rows)), candidate], ncols)
    return grown.rows == base.rows
