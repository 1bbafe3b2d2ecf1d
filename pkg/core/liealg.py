# core/liealg.py

"""
Finite-dimensional Lie algebras over Q.

A LieAlgebra stores structure constants c_ij^k of [e_i, e_j] only for i < j;
antisymmetry is implicit. Everything here is exact.

Flow for a Levi decomposition:
  validate -> killing_form -> radical (Cartan's criterion) -> verify_levi
  -> adapted algebra (radical generators first, Levi generators last)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from core.errors import InputError, InvariantViolation
from core.exactlin import QMatrix, Vector, kernel_basis, rank, row_space_basis, solve
from utils.log import get_logger

log = get_logger("liealg")


# =========================
# Lie algebra
# =========================

@dataclass(frozen=True, eq=False)
class LieAlgebra:
    name: str
    basis: Tuple[str, ...]
    brackets: Mapping = field(default_factory=dict)   # (i, j), i<j -> {k: c_ij^k}

    def __post_init__(self):
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise InputError("basis names must be distinct", self.name)

        clean = {}
        for key, coeffs in self.brackets.items():
            i, j = key
            if not (0 <= i < j < n):
                raise InputError(f"bracket index ({i}, {j}) needs 0 <= i < j < {n}", self.name)
            row = {}
            for k, c in coeffs.items():
                if not (0 <= k < n):
                    raise InputError(f"coefficient index {k} out of range for [{i}, {j}]", self.name)
                c = Fraction(c)
                if c:
                    row[k] = c
            if row:
                clean[(i, j)] = MappingProxyType(row)

        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "brackets", MappingProxyType(clean))

    @property
    def dim(self) -> int:
        return len(self.basis)

    # ---------------------
    # Brackets
    # ---------------------

    def bracket_basis(self, i: int, j: int) -> Dict[int, Fraction]:
        """[e_i, e_j] as {k: coefficient}."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] += xi * yj * c
        return out

    def unit_vector(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def adjoint_matrix(self, i: int) -> np.ndarray:
        """Dense matrix of ad e_i; column j holds the coordinates of [e_i, e_j]."""
        n = self.dim
        ad = np.empty((n, n), dtype=object)
        ad.fill(Fraction(0))
        for j in range(n):
            for k, c in self.bracket_basis(i, j).items():
                ad[k, j] = c
        return ad

    # ---------------------
    # Change of basis
    # ---------------------

    def change_basis(self, vectors: Sequence[Sequence], names: Sequence[str], name: Optional[str] = None) -> "LieAlgebra":
        """
        Re-express the structure constants in the basis given by `vectors`
        (coordinates in the current basis). The vectors must form a basis.
        """
        n = self.dim
        if len(vectors) != n or len(names) != n:
            raise InputError(f"change of basis needs {n} vectors and names", self.name)

        change = QMatrix.from_columns(vectors, n)
        if rank(change) != n:
            raise InputError("change-of-basis vectors are linearly dependent", self.name)

        brackets = {}
        for a, b in combinations(range(n), 2):
            image = self.bracket(vectors[a], vectors[b])
            if not any(image):
                continue
            coords = solve(change, image)
            if coords is None:
                raise InvariantViolation("bracket image outside the span of a full basis")
            brackets[(a, b)] = {k: c for k, c in enumerate(coords) if c}

        return LieAlgebra(name or self.name, tuple(names), brackets)

    def restrict(self, indices: Sequence[int], name: str) -> "LieAlgebra":
        """
        Sub-algebra on a set of coordinate generators closed under the
        bracket (an ideal or a subalgebra in an adapted basis).
        """
        position = {g: p for p, g in enumerate(indices)}
        brackets = {}
        for a, b in combinations(range(len(indices)), 2):
            row = {}
            for k, c in self.bracket_basis(indices[a], indices[b]).items():
                if k not in position:
                    raise InvariantViolation(
                        f"[{self.basis[indices[a]]}, {self.basis[indices[b]]}] leaves the span of {name}"
                    )
                row[position[k]] = c
            if row:
                brackets[(a, b)] = row
        return LieAlgebra(name, tuple(self.basis[i] for i in indices), brackets)


# =========================
# Subspaces
# =========================

@dataclass(frozen=True, eq=False)
class Subspace:
    ambient: LieAlgebra
    vectors: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def spanned_by(cls, ambient: LieAlgebra, vectors: Sequence[Sequence]) -> "Subspace":
        """Canonical reduced-echelon basis of the span (independent by construction)."""
        for v in vectors:
            if len(v) != ambient.dim:
                raise InputError(f"vector of length {len(v)} in a {ambient.dim}-dimensional algebra", ambient.name)
        basis = row_space_basis([[Fraction(c) for c in v] for v in vectors])
        return cls(ambient, tuple(tuple(v) for v in basis))

    @classmethod
    def from_indices(cls, ambient: LieAlgebra, indices: Sequence[int]) -> "Subspace":
        if len(set(indices)) != len(indices):
            raise InputError("subspace indices must be distinct", ambient.name)
        for i in indices:
            if not (0 <= i < ambient.dim):
                raise InputError(f"basis index {i} out of range", ambient.name)
        return cls.spanned_by(ambient, [ambient.unit_vector(i) for i in indices])

    @classmethod
    def zero(cls, ambient: LieAlgebra) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: LieAlgebra) -> "Subspace":
        return cls.from_indices(ambient, range(ambient.dim))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v: Sequence) -> bool:
        if not any(v):
            return True
        if not self.vectors:
            return False
        m = QMatrix.from_columns(self.vectors, self.ambient.dim)
        return solve(m, list(v)) is not None

    def coordinate_indices(self) -> Optional[List[int]]:
        """Indices when every basis vector is a coordinate vector, else None."""
        out = []
        for v in self.vectors:
            nz = [i for i, c in enumerate(v) if c]
            if len(nz) != 1 or v[nz[0]] != 1:
                return None
            out.append(nz[0])
        return out

    def bracket_with(self, other: "Subspace") -> "Subspace":
        images = [self.ambient.bracket(x, y) for x in self.vectors for y in other.vectors]
        return Subspace.spanned_by(self.ambient, [v for v in images if any(v)])

    def is_subalgebra(self) -> bool:
        return all(self.contains(self.ambient.bracket(x, y)) for x, y in combinations(self.vectors, 2))

    def is_ideal(self) -> bool:
        L = self.ambient
        return all(self.contains(L.bracket(L.unit_vector(i), v)) for i in range(L.dim) for v in self.vectors)

    def describe(self) -> List[str]:
        """Human-readable basis vectors in terms of the ambient names."""
        out = []
        for v in self.vectors:
            parts = []
            for c, name in zip(v, self.ambient.basis):
                if not c:
                    continue
                if c == 1:
                    parts.append(name)
                elif c == -1:
                    parts.append(f"-{name}")
                else:
                    parts.append(f"{c}*{name}")
            out.append(" + ".join(parts).replace("+ -", "- "))
        return out


# =========================
# Validation (Jacobi)
# =========================

@dataclass
class ValidationReport:
    state: str                       # VALID | INVALID
    checked_triples: int
    violation: Optional[Tuple[str, str, str]]
    residue: Dict[str, Fraction]
    reason: str

    @property
    def ok(self) -> bool:
        return self.state == "VALID"


def jacobi_residue(L: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]"""
    e = L.unit_vector
    total = [Fraction(0)] * L.dim
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        term = L.bracket(L.bracket(e(a), e(b)), e(c))
        total = [x + y for x, y in zip(total, term)]
    return total


def validate(L: LieAlgebra) -> ValidationReport:
    checked = 0
    for i, j, k in combinations(range(L.dim), 3):
        checked += 1
        residue = jacobi_residue(L, i, j, k)
        if any(residue):
            names = (L.basis[i], L.basis[j], L.basis[k])
            log.info("Jacobi fails on %s", names)
            return ValidationReport(
                state="INVALID",
                checked_triples=checked,
                violation=names,
                residue={L.basis[t]: c for t, c in enumerate(residue) if c},
                reason=f"Jacobi identity fails on ({', '.join(names)})",
            )

    return ValidationReport("VALID", checked, None, {}, "Jacobi identity holds on all basis triples")


# =========================
# Killing form
# =========================

def killing_form(L: LieAlgebra) -> QMatrix:
    """kappa(e_i, e_j) = trace(ad e_i . ad e_j)"""
    ads = [L.adjoint_matrix(i) for i in range(L.dim)]
    entries = {}
    for i in range(L.dim):
        for j in range(i, L.dim):
            value = Fraction(np.trace(ads[i].dot(ads[j])))
            if value:
                entries[(i, j)] = value
                entries[(j, i)] = value
    return QMatrix(L.dim, L.dim, entries)


def killing_value(kappa: QMatrix, x: Sequence, y: Sequence) -> Fraction:
    kx = kappa.transpose().apply(list(x))
    return sum((a * b for a, b in zip(kx, y)), Fraction(0))


def check_killing_invariance(L: LieAlgebra) -> Optional[Tuple[str, str, str]]:
    """First basis triple with kappa([x,y],z) != kappa(x,[y,z]), or None."""
    kappa = killing_form(L)
    e = L.unit_vector
    for i in range(L.dim):
        for j in range(L.dim):
            for k in range(L.dim):
                left = killing_value(kappa, L.bracket(e(i), e(j)), e(k))
                right = killing_value(kappa, e(i), L.bracket(e(j), e(k)))
                if left != right:
                    return (L.basis[i], L.basis[j], L.basis[k])
    return None


# =========================
# Derived series / radical
# =========================

def derived_algebra(L: LieAlgebra) -> Subspace:
    return Subspace.whole(L).bracket_with(Subspace.whole(L))


def derived_series(space: Subspace, max_length: Optional[int] = None) -> List[Subspace]:
    """space, [space, space], ... until it vanishes or stabilises."""
    series = [space]
    limit = max_length or space.ambient.dim + 1
    while series[-1].dim and len(series) <= limit:
        nxt = series[-1].bracket_with(series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_solvable(space: Subspace) -> bool:
    return derived_series(space)[-1].dim == 0


def radical(L: LieAlgebra) -> Subspace:
    """
    Cartan's criterion in characteristic 0:
        rad(L) = { x : kappa(x, y) = 0 for all y in [L, L] }.
    The result is re-checked to be a solvable ideal.
    """
    kappa = killing_form(L)
    derived = derived_algebra(L)

    constraints = [kappa.transpose().apply(list(d)) for d in derived.vectors]
    if constraints:
        rad_vectors = kernel_basis(QMatrix.from_rows(constraints))
    else:
        rad_vectors = [L.unit_vector(i) for i in range(L.dim)]

    rad = Subspace.spanned_by(L, rad_vectors)

    if not rad.is_ideal():
        raise InvariantViolation(f"computed radical of {L.name} is not an ideal")
    if not is_solvable(rad):
        raise InvariantViolation(f"computed radical of {L.name} is not solvable")

    return rad


# =========================
# Classification
# =========================

@dataclass
class Classification:
    kind: str              # solvable | semisimple | mixed
    radical_dim: int
    radical: Subspace
    killing_rank: int
    derived_length: Optional[int]


def classify(L: LieAlgebra) -> Classification:
    series = derived_series(Subspace.whole(L))
    solvable = series[-1].dim == 0
    kappa_rank = rank(killing_form(L))
    rad = radical(L)

    if solvable:
        kind = "solvable"
    elif kappa_rank == L.dim:
        kind = "semisimple"
    else:
        kind = "mixed"

    if solvable != (rad.dim == L.dim):
        raise InvariantViolation(f"derived series and radical disagree on {L.name}")

    return Classification(
        kind=kind,
        radical_dim=rad.dim,
        radical=rad,
        killing_rank=kappa_rank,
        derived_length=len(series) - 1 if solvable else None,
    )


# =========================
# Levi decomposition
# =========================

@dataclass
class LeviDecomposition:
    """Adapted algebra: generators 0..r-1 span the radical, r..n-1 the Levi factor."""
    algebra: LieAlgebra
    radical_dim: int
    levi_dim: int
    adapted_basis: List[Vector]      # coordinates in the input basis
    radical_algebra: LieAlgebra
    levi_algebra: LieAlgebra

    @property
    def radical_indices(self) -> List[int]:
        return list(range(self.radical_dim))

    @property
    def levi_indices(self) -> List[int]:
        return list(range(self.radical_dim, self.radical_dim + self.levi_dim))


@dataclass
class LeviReport:
    state: str                         # VERIFIED | FAILED
    failed_condition: Optional[str]    # subalgebra | semisimple | complement
    reason: str
    decomposition: Optional[LeviDecomposition] = None

    @property
    def ok(self) -> bool:
        return self.state == "VERIFIED"


def _adapted_names(L: LieAlgebra, vectors: Sequence[Sequence], prefix: str) -> List[str]:
    names = []
    for count, v in enumerate(vectors):
        nz = [i for i, c in enumerate(v) if c]
        if len(nz) == 1 and v[nz[0]] == 1:
            names.append(L.basis[nz[0]])
        else:
            names.append(f"{prefix}{count + 1}")
    return names


def verify_levi(L: LieAlgebra, h: Subspace) -> LeviReport:
    # (a) subalgebra
    if not h.is_subalgebra():
        return LeviReport("FAILED", "subalgebra", "h is not closed under the bracket")

    # (b) kappa restricted to h nondegenerate
    if h.dim:
        kappa = killing_form(L)
        gram = [[killing_value(kappa, x, y) for y in h.vectors] for x in h.vectors]
        if rank(QMatrix.from_rows(gram)) != h.dim:
            return LeviReport("FAILED", "semisimple", "Killing form restricted to h is degenerate")

    # (c) L = rad (+) h
    rad = radical(L)
    vectors = [list(v) for v in rad.vectors] + [list(v) for v in h.vectors]
    if rad.dim + h.dim != L.dim or (vectors and rank(QMatrix.from_rows(vectors)) != L.dim):
        return LeviReport(
            "FAILED", "complement",
            f"radical (dim {rad.dim}) and h (dim {h.dim}) do not span {L.name} as a direct sum",
        )

    names = _adapted_names(L, rad.vectors, "r") + _adapted_names(L, h.vectors, "s")
    if len(set(names)) != len(names):
        names = [f"r{i + 1}" for i in range(rad.dim)] + [f"s{i + 1}" for i in range(h.dim)]

    adapted = L.change_basis(vectors, names, name=f"{L.name}[adapted]")
    r = rad.dim
    decomposition = LeviDecomposition(
        algebra=adapted,
        radical_dim=r,
        levi_dim=h.dim,
        adapted_basis=vectors,
        radical_algebra=adapted.restrict(list(range(r)), f"rad({L.name})"),
        levi_algebra=adapted.restrict(list(range(r, L.dim)), f"levi({L.name})"),
    )
    return LeviReport("VERIFIED", None, "L = rad (+) h with h semisimple", decomposition)
