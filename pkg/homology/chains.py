# homology/chains.py

"""
Chevalley-Eilenberg standard complex C_p(g, M) = Lambda^p g (x) M.

    d(X_1 ^ ... ^ X_p (x) a)
        = sum_i (-1)^(i-1) X_1 ^ .. X_i^ .. ^ X_p (x) a.X_i
        + sum_{i<j} (-1)^(i+j) [X_i, X_j] ^ X_1 ^ .. X_i^ .. X_j^ .. ^ X_p (x) a

M is a left g-module; it enters the complex as the right module
a.X = -X.a so that d o d = 0.
"""

from bisect import bisect_left
from fractions import Fraction
from itertools import combinations
from typing import Dict, Hashable, List, NamedTuple, Optional, Tuple

from core.errors import PreconditionError, TruncationOverflow
from core.exactlin import LinearCombination, QMatrix, accumulate, format_rational
from core.liealg import LeviDecomposition, LieAlgebra
from core.uea import PbwMonomial, monomial_degree
from smash.module_algebra import ModuleAlgebraAction, levi_action
from smash.smash_product import include_algebra, include_hopf, module_action_on_A

Wedge = Tuple[int, ...]


class ChainBasisIndex(NamedTuple):
    wedge: Wedge
    coeff: Hashable


class ChainElement(LinearCombination):
    """Sparse chain: ChainBasisIndex -> Fraction."""


# =========================
# Coefficient modules
# =========================

class CoefficientModule:
    """
    Left g-module with a distinguished basis.

    finite modules have a fixed basis; windowed ones are graded and only
    a degree window of the basis takes part in a given matrix.
    """

    name = ""
    finite = True
    degree_raise = 0

    def __init__(self, lie: LieAlgebra):
        self.lie = lie

    def basis(self, max_degree: Optional[int] = None) -> List[Hashable]:
        raise NotImplementedError

    def act(self, i: int, key) -> LinearCombination:
        """e_i . key"""
        raise NotImplementedError

    def augmentation(self, key) -> Fraction:
        return Fraction(0)

    def degree(self, key) -> int:
        return 0

    def format_key(self, key) -> str:
        return str(key)


class TrivialModule(CoefficientModule):
    name = "trivial"
    UNIT = "1"

    def basis(self, max_degree=None):
        return [self.UNIT]

    def act(self, i, key):
        return LinearCombination()

    def augmentation(self, key):
        return Fraction(1)


class AdjointModule(CoefficientModule):
    name = "adjoint"

    def basis(self, max_degree=None):
        return list(range(self.lie.dim))

    def act(self, i, key):
        return LinearCombination(self.lie.bracket_basis(i, key))

    def format_key(self, key):
        return self.lie.basis[key]


class SmashCoefficientModule(CoefficientModule):
    """
    Truncated U(rad) as a module over the adapted algebra through
    U(g) = U(rad) # U(levi):
        radical generator r_i acts by (r_i (x) 1) . a  (left multiplication)
        Levi generator s_j   acts by (1 (x) s_j) . a   (adjoint action)
    Radical generators raise the degree by one, so the algebra carries one
    degree of headroom above the window N.
    """

    name = "smash"
    finite = False
    degree_raise = 1

    def __init__(self, decomposition: LeviDecomposition, max_degree: int):
        if max_degree < 0:
            raise PreconditionError(f"truncation degree must be >= 0, got {max_degree}")
        super().__init__(decomposition.algebra)
        self.decomposition = decomposition
        self.max_degree = max_degree
        self.action: ModuleAlgebraAction = levi_action(decomposition, max_degree + self.degree_raise)
        self._cache: Dict[Tuple[int, PbwMonomial], LinearCombination] = {}

    def basis(self, max_degree=None):
        bound = self.max_degree if max_degree is None else max_degree
        return self.action.algebra.basis(bound)

    def act(self, i, key):
        cached = self._cache.get((i, key))
        if cached is not None:
            return cached

        A, H = self.action.algebra, self.action.hopf
        r = self.decomposition.radical_dim
        b = LinearCombination.basis(key)
        if i < r:
            u = include_algebra(A.generator(i), self.action)
        else:
            u = include_hopf(H.element(H.generator_key(i - r)), self.action)
        result = module_action_on_A(u, b, self.action)

        self._cache[(i, key)] = result
        return result

    def augmentation(self, key):
        """eps_A = eps i1: the coefficient of the empty PBW monomial."""
        return Fraction(1) if not any(key) else Fraction(0)

    def degree(self, key):
        return monomial_degree(key)

    def format_key(self, key):
        return self.action.algebra.format_key(key)


# =========================
# Chains
# =========================

def chain_basis(p: int, L: LieAlgebra, module: CoefficientModule, max_degree: Optional[int] = None) -> List[ChainBasisIndex]:
    if p < 0 or p > L.dim:
        return []
    coeffs = module.basis(max_degree)
    return [ChainBasisIndex(w, a) for w in combinations(range(L.dim), p) for a in coeffs]


def wedge_element(wedge: Wedge, coeff_key, value=1) -> ChainElement:
    """Chain X_w (x) a with the wedge put in increasing order (with its sign)."""
    wedge = tuple(wedge)
    if len(set(wedge)) != len(wedge):
        return ChainElement()
    inversions = sum(1 for s, t in combinations(range(len(wedge)), 2) if wedge[s] > wedge[t])
    sign = -1 if inversions % 2 else 1
    return ChainElement({ChainBasisIndex(tuple(sorted(wedge)), coeff_key): sign * Fraction(value)})


def _differential_basis(key: ChainBasisIndex, L: LieAlgebra, module: CoefficientModule) -> ChainElement:
    wedge, a = key
    p = len(wedge)
    pairs = []

    # action terms, right action a.X_t = -X_t.a
    for t, i in enumerate(wedge):
        rest = wedge[:t] + wedge[t + 1:]
        sign = -1 if t % 2 else 1
        for a_out, c in module.act(i, a).items():
            pairs.append((ChainBasisIndex(rest, a_out), -sign * c))

    # bracket terms
    for s, t in combinations(range(p), 2):
        rest = wedge[:s] + wedge[s + 1:t] + wedge[t + 1:]
        sign = -1 if (s + t) % 2 else 1
        for k, c in L.bracket_basis(wedge[s], wedge[t]).items():
            if k in rest:
                continue
            pos = bisect_left(rest, k)
            moved = -1 if pos % 2 else 1
            pairs.append((ChainBasisIndex(rest[:pos] + (k,) + rest[pos:], a), sign * moved * c))

    return accumulate(pairs, ChainElement)


def apply_differential(chain: ChainElement, L: LieAlgebra, module: CoefficientModule) -> ChainElement:
    if module.lie.dim != L.dim:
        raise PreconditionError(f"module over a {module.lie.dim}-dimensional algebra used with {L.name}")
    total = ChainElement()
    for key, c in chain.items():
        total = total + _differential_basis(key, L, module).scale(c)
    return total


def ce_differential(p: int, L: LieAlgebra, module: CoefficientModule, max_degree: Optional[int] = None) -> QMatrix:
    """
    Matrix of d: C_p -> C_(p-1). Columns span the window max_degree,
    rows the window max_degree + module.degree_raise.
    """
    if not 1 <= p <= L.dim:
        raise PreconditionError(f"ce_differential needs 1 <= p <= {L.dim}, got {p}")
    if module.lie.dim != L.dim:
        raise PreconditionError(f"module over a {module.lie.dim}-dimensional algebra used with {L.name}")

    row_window = None
    if not module.finite:
        window = module.max_degree if max_degree is None else max_degree
        max_degree, row_window = window, window + module.degree_raise

    columns = chain_basis(p, L, module, max_degree)
    rows = chain_basis(p - 1, L, module, row_window)
    row_index = {key: r for r, key in enumerate(rows)}

    entries = {}
    for col, key in enumerate(columns):
        for image, c in _differential_basis(key, L, module).items():
            r = row_index.get(image)
            if r is None:
                raise TruncationOverflow(module.degree(image.coeff), row_window or 0, "differential image")
            entries[(r, col)] = c

    return QMatrix(len(rows), len(columns), entries)


def format_chain(chain: ChainElement, L: LieAlgebra, module: CoefficientModule) -> str:
    if chain.is_zero():
        return "0"
    parts = []
    for (wedge, a), c in chain.items():
        wedge_text = "^".join(L.basis[i] for i in wedge) or "1"
        parts.append(f"{format_rational(c)}*{wedge_text} (x) {module.format_key(a)}")
    return " + ".join(parts)
