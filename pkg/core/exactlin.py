# core/exactlin.py

"""
Exact rational linear algebra.

- LinearCombination: immutable sparse vector (key -> Fraction), the common
  carrier for enveloping-algebra elements, tensors, smash elements and chains.
- QMatrix: sparse matrix over Q, entries stored only when nonzero.
- rank (fraction-free Bareiss), kernel_basis and solve (Gauss-Jordan).

Never floating point: a single rounding error flips a Betti number.
"""

import re
from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Dict, Generic, Hashable, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from core.errors import InputError

K = TypeVar("K", bound=Hashable)

Rational = Fraction
Vector = List[Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text, context: str = "") -> Fraction:
    """
    Parse "p" or "p/q" (q > 0). Decimals and floats are rejected so that
    no binary rounding can sneak into structure constants.
    """
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InputError(f"expected a rational string, got {text!r}", context)
    if isinstance(text, int):
        return Fraction(text)

    match = _RATIONAL_RE.match(text)
    if not match:
        raise InputError(f"malformed rational {text!r}", context)

    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise InputError(f"zero denominator in {text!r}", context)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# =========================
# Sparse linear combinations
# =========================

class LinearCombination(Mapping, Generic[K]):
    """
    Finite formal sum  sum_k c_k * k  with nonzero rational coefficients.
    Behaves as a read-only mapping key -> Fraction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: Dict[K, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                coeff = Fraction(coeff)
                if coeff:
                    clean[key] = clean.get(key, Fraction(0)) + coeff
                    if not clean[key]:
                        del clean[key]
        self._terms = clean

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls()

    @classmethod
    def basis(cls, key, coeff=1) -> "LinearCombination":
        return cls({key: coeff})

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic
    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        acc = defaultdict(Fraction, self._terms)
        for key, coeff in other.items():
            acc[key] += coeff
        return type(self)(acc)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + other.scale(-1)

    def __neg__(self) -> "LinearCombination":
        return self.scale(-1)

    def scale(self, factor) -> "LinearCombination":
        factor = Fraction(factor)
        if not factor:
            return type(self)()
        return type(self)({k: c * factor for k, c in self._terms.items()})

    def __rmul__(self, factor) -> "LinearCombination":
        return self.scale(factor)

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{format_rational(c)}*{k!r}" for k, c in self._terms.items())
        return f"{type(self).__name__}({body})"


def accumulate(pairs: Iterable[Tuple[K, Fraction]], cls=LinearCombination) -> LinearCombination:
    acc = defaultdict(Fraction)
    for key, coeff in pairs:
        acc[key] += coeff
    return cls(acc)


# =========================
# Matrices
# =========================

@dataclass(frozen=True, eq=False)
class QMatrix:
    rows: int
    cols: int
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            value = Fraction(value)
            if value:
                clean[(r, c)] = value
        object.__setattr__(self, "entries", MappingProxyType(clean))

    # ---------------------
    # Constructors
    # ---------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            for c, value in enumerate(row):
                if value:
                    entries[(r, c)] = Fraction(value)
        return cls(n_rows, n_cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "QMatrix":
        entries = {}
        for c, column in enumerate(columns):
            for r, value in enumerate(column):
                if value:
                    entries[(r, c)] = Fraction(value)
        return cls(rows, len(columns), entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    # ---------------------
    # Accessors
    # ---------------------

    def __getitem__(self, rc: Tuple[int, int]) -> Fraction:
        return self.entries.get(rc, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and dict(self.entries) == dict(other.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            out[r][c] = value
        return out

    def to_dense(self) -> np.ndarray:
        dense = np.empty((self.rows, self.cols), dtype=object)
        dense.fill(Fraction(0))
        for (r, c), value in self.entries.items():
            dense[r, c] = value
        return dense

    def to_lists(self) -> List[List[Fraction]]:
        return [[self[(r, c)] for c in range(self.cols)] for r in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    # ---------------------
    # Arithmetic
    # ---------------------

    def matmul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        right_rows = other.row_dicts()
        acc = defaultdict(Fraction)
        for (r, k), value in self.entries.items():
            for c, w in right_rows[k].items():
                acc[(r, c)] += value * w
        return QMatrix(self.rows, other.cols, acc)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return self.matmul(other)

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [Fraction(0)] * self.rows
        for (r, c), value in self.entries.items():
            if vector[c]:
                out[r] += value * vector[c]
        return out


# =========================
# Rank (fraction-free Bareiss)
# =========================

def _integer_rows(m: QMatrix) -> List[Dict[int, int]]:
    """Clear denominators row by row; row scaling does not change rank."""
    rows = []
    for row in m.row_dicts():
        if not row:
            continue
        scale = lcm(*(v.denominator for v in row.values()))
        rows.append({c: int(v * scale) for c, v in row.items()})
    return rows


def rank(m: QMatrix) -> int:
    """
    Rank over Q by fraction-free (Bareiss) elimination on integer rows.

    Each update  (p * a_rc - a_r,col * a_piv,c) / prev  is an exact integer
    division; entries stay bounded by minors of the input.
    """
    rows = _integer_rows(m)
    r = 0
    prev = 1

    for col in range(m.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i].get(col)), None)
        if pivot is None:
            continue

        rows[r], rows[pivot] = rows[pivot], rows[r]
        piv_row = rows[r]
        p = piv_row[col]

        for i in range(r + 1, len(rows)):
            row = rows[i]
            a = row.get(col, 0)
            updated = {}
            for c in set(row) | set(piv_row):
                if c <= col:
                    continue
                value = p * row.get(c, 0) - a * piv_row.get(c, 0)
                if value:
                    updated[c] = value // prev
            rows[i] = updated

        prev = p
        r += 1
        if r == len(rows):
            break

    return r


# =========================
# Gauss-Jordan (kernel, solve)
# =========================

def _rref(rows: List[Dict[int, Fraction]], n_cols: int) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    """Reduced row echelon form of sparse rows over columns 0..n_cols-1."""
    rows = [dict(r) for r in rows if r]
    pivots: List[int] = []
    r = 0

    for col in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i].get(col)), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]

        inv = 1 / rows[r][col]
        rows[r] = {c: v * inv for c, v in rows[r].items()}
        piv_row = rows[r]

        for i in range(len(rows)):
            if i == r:
                continue
            factor = rows[i].get(col)
            if not factor:
                continue
            row = rows[i]
            for c, v in piv_row.items():
                new = row.get(c, Fraction(0)) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)

        pivots.append(col)
        r += 1
        if r == len(rows):
            break

    return rows[:r], pivots


def kernel_basis(m: QMatrix) -> List[Vector]:
    """
    Basis of the right null space. One vector per free column: the free
    coordinate is 1, the other free coordinates are 0.
    """
    reduced, pivots = _rref(m.row_dicts(), m.cols)
    pivot_set = set(pivots)
    basis = []

    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, piv in zip(reduced, pivots):
            coeff = row.get(free)
            if coeff:
                v[piv] = -coeff
        basis.append(v)

    return basis


def solve(m: QMatrix, b: Sequence) -> Optional[Vector]:
    """
    Some x with m x = b (free variables set to 0), or None when the
    system is inconsistent.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")

    augmented = m.row_dicts()
    for r, value in enumerate(b):
        if value:
            augmented[r][m.cols] = Fraction(value)

    reduced, pivots = _rref(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None

    x = [Fraction(0)] * m.cols
    for row, piv in zip(reduced, pivots):
        x[piv] = row.get(m.cols, Fraction(0))
    return x


def row_space_basis(vectors: Sequence[Sequence]) -> List[Vector]:
    """Reduced echelon basis of the span of the given vectors."""
    if not vectors:
        return []
    n = len(vectors[0])
    rows = [{c: Fraction(v) for c, v in enumerate(vec) if v} for vec in vectors]
    reduced, _ = _rref(rows, n)
    return [[row.get(c, Fraction(0)) for c in range(n)] for row in reduced]
