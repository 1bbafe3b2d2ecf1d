# homology/betti.py

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Tuple

from config.settings import HOMOLOGY_WORKERS
from core.errors import PreconditionError
from core.exactlin import format_rational, rank
from core.liealg import LieAlgebra, classify
from homology.chains import CoefficientModule, TrivialModule, ce_differential, chain_basis
from utils.log import get_logger

log = get_logger("homology")


def _require_finite(module: CoefficientModule):
    if not module.finite:
        raise PreconditionError(f"Betti numbers need a finite-dimensional module, got {module.name}")


def _chain_dim(p: int, L: LieAlgebra, module: CoefficientModule) -> int:
    if p < 0 or p > L.dim:
        return 0
    return comb(L.dim, p) * len(module.basis())


def _differential_rank(p: int, L: LieAlgebra, module: CoefficientModule) -> int:
    """rank d_p, with d_0 and d_(n+1) the zero maps."""
    if p < 1 or p > L.dim:
        return 0
    return rank(ce_differential(p, L, module))


def betti(L: LieAlgebra, module: CoefficientModule, p: int) -> int:
    """b_p = dim C_p - rank d_p - rank d_(p+1)"""
    _require_finite(module)
    if p < 0 or p > L.dim:
        return 0
    return _chain_dim(p, L, module) - _differential_rank(p, L, module) - _differential_rank(p + 1, L, module)


@dataclass
class BettiTable:
    algebra: str
    module: str
    chain_dims: List[int]
    ranks: List[int]               # ranks[p] = rank d_p, p = 0..n+1
    betti: List[int]

    @property
    def euler_characteristic(self) -> int:
        return euler_characteristic(self.betti)


def betti_table(L: LieAlgebra, module: Optional[CoefficientModule] = None, workers: int = HOMOLOGY_WORKERS) -> BettiTable:
    """All Betti numbers; the rank of each d_p is an independent job."""
    module = module or TrivialModule(L)
    _require_finite(module)
    n = L.dim

    degrees = list(range(1, n + 1))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        inner = list(pool.map(lambda p: _differential_rank(p, L, module), degrees))
    ranks = [0] + inner + [0]

    dims = [_chain_dim(p, L, module) for p in range(n + 1)]
    numbers = [dims[p] - ranks[p] - ranks[p + 1] for p in range(n + 1)]
    log.debug("betti %s (%s coefficients): %s", L.name, module.name, numbers)

    return BettiTable(L.name, module.name, dims, ranks, numbers)


def euler_characteristic(numbers) -> int:
    return sum(b if p % 2 == 0 else -b for p, b in enumerate(numbers))


# =========================
# Semisimple top differential
# =========================

@dataclass
class TopDifferentialReport:
    algebra: str
    degree: int
    zero: bool
    nonzero_entry: Optional[Tuple[str, str, str]] = None     # (row chain, column chain, value)

    @property
    def ok(self) -> bool:
        return self.zero


def _format_wedge(L: LieAlgebra, wedge) -> str:
    return "^".join(L.basis[i] for i in wedge) or "1"


def top_differential_zero(L: LieAlgebra) -> TopDifferentialReport:
    """d: Lambda^n g -> Lambda^(n-1) g with trivial coefficients vanishes for semisimple g."""
    kind = classify(L).kind
    if kind != "semisimple":
        raise PreconditionError(f"{L.name} is {kind}, not semisimple")

    n = L.dim
    module = TrivialModule(L)
    d = ce_differential(n, L, module)
    if d.is_zero():
        return TopDifferentialReport(L.name, n, True)

    (r, c), value = next(iter(sorted(d.entries.items())))
    rows = chain_basis(n - 1, L, module)
    cols = chain_basis(n, L, module)
    entry = (_format_wedge(L, rows[r].wedge), _format_wedge(L, cols[c].wedge), format_rational(value))
    return TopDifferentialReport(L.name, n, False, entry)


# =========================
# d o d = 0
# =========================

@dataclass
class DSquaredReport:
    algebra: str
    module: str
    window: Optional[int]
    checked: List[int] = field(default_factory=list)
    failures: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_d_squared(L: LieAlgebra, module: Optional[CoefficientModule] = None) -> DSquaredReport:
    """
    d_p d_(p+1) = 0 for p = 1..n-1. For a windowed module with window N,
    d_(p+1) is taken on the window N - raise so that both factors stay
    inside the truncation.
    """
    module = module or TrivialModule(L)
    window: Optional[int] = None
    inner_window: Optional[int] = None
    if not module.finite:
        window = module.max_degree
        inner_window = window - module.degree_raise
        if inner_window < 0:
            raise PreconditionError(f"window {window} leaves no room for a composite")

    report = DSquaredReport(L.name, module.name, window)
    for p in range(1, L.dim):
        outer = ce_differential(p, L, module, window)
        inner = ce_differential(p + 1, L, module, inner_window)
        report.checked.append(p)
        if not (outer @ inner).is_zero():
            log.info("d_%d d_%d != 0 on %s", p, p + 1, L.name)
            report.failures.append(p)
    return report
