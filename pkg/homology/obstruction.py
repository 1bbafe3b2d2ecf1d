# homology/obstruction.py

"""
Obstruction certificate for H_k(g, U(rad)) != 0, k = dim of a Levi factor.

In the adapted basis (radical first, Levi last) put
    eta   = s_1 ^ ... ^ s_k (x) 1
    xi    = the functional on Lambda^k g with xi(s_1 ^ ... ^ s_k) = 1 that
            vanishes on every other basis wedge (those involve the radical)
    eps_A = coefficient of the empty PBW monomial of U(rad)
and verify
    (C1) d(eta) = 0,
    (C2) (xi (x) eps_A)(d w) = 0 for every basis chain w of C_(k+1) in the window,
    (C3) (xi (x) eps_A)(eta) = 1.
A linear solve then confirms independently that eta is not a boundary
of the truncated complex.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from config.settings import DEFAULT_TRUNCATION
from core.errors import PreconditionError
from core.exactlin import format_rational, solve
from core.liealg import LieAlgebra, Subspace, classify, verify_levi
from homology.chains import (
    ChainBasisIndex,
    ChainElement,
    CoefficientModule,
    SmashCoefficientModule,
    apply_differential,
    ce_differential,
    chain_basis,
    format_chain,
)
from utils.log import get_logger

log = get_logger("obstruction")

PASS = "PASS"
FAIL = "FAIL"
VACUOUS = "VACUOUS"


@dataclass
class ConditionResult:
    name: str
    passed: bool
    checked: int
    statement: str
    counterexample: Optional[str] = None


@dataclass
class Certificate:
    algebra: str
    state: str                                 # PASS | FAIL | VACUOUS
    reason: str
    k: int
    truncation: int
    eta: ChainElement = field(default_factory=ChainElement)
    xi: Dict[tuple, Fraction] = field(default_factory=dict)
    eps_a: str = "coefficient of 1 in U(rad)"
    levi: List[str] = field(default_factory=list)
    radical: List[str] = field(default_factory=list)
    checks: Dict[str, ConditionResult] = field(default_factory=dict)
    non_boundary: Optional[bool] = None
    solve_agrees: Optional[bool] = None
    eta_text: str = ""

    @property
    def ok(self) -> bool:
        return self.state in (PASS, VACUOUS)


def _functional(xi: Dict[tuple, Fraction], module: CoefficientModule, chain: ChainElement) -> Fraction:
    """(xi (x) eps_A)"""
    total = Fraction(0)
    for (wedge, a), c in chain.items():
        weight = xi.get(wedge)
        if weight:
            total += c * weight * module.augmentation(a)
    return total


def obstruction_certificate(
    L: LieAlgebra,
    h: Optional[Subspace] = None,
    truncation: int = DEFAULT_TRUNCATION,
    scale=1,
) -> Certificate:
    """
    h defaults to the whole algebra when L is semisimple. `scale`
    multiplies eta and divides xi; outcomes do not depend on it.
    """
    kind = classify(L).kind
    if kind == "solvable":
        return Certificate(
            L.name, VACUOUS, "solvable: no obstruction, certificate vacuous",
            k=0, truncation=truncation,
        )

    if truncation < 1:
        raise PreconditionError(f"truncation must be >= 1, got {truncation}")
    scale = Fraction(scale)
    if not scale:
        raise PreconditionError("eta scale must be nonzero")

    if h is None:
        if kind != "semisimple":
            raise PreconditionError(f"{L.name} is {kind}: a Levi subalgebra must be given")
        h = Subspace.whole(L)

    levi = verify_levi(L, h)
    if not levi.ok:
        raise PreconditionError(f"Levi factor not verified ({levi.failed_condition}): {levi.reason}")

    dec = levi.decomposition
    g = dec.algebra
    n, r, k = g.dim, dec.radical_dim, dec.levi_dim
    module = SmashCoefficientModule(dec, truncation)
    one = module.action.algebra.one_key()

    levi_wedge = tuple(range(r, n))
    eta = ChainElement({ChainBasisIndex(levi_wedge, one): scale})
    xi = {levi_wedge: 1 / scale}
    log.info("certificate for %s: k=%d, N=%d", L.name, k, truncation)

    checks: Dict[str, ConditionResult] = {}

    # (C1) cycle
    d_eta = apply_differential(eta, g, module)
    checks["C1"] = ConditionResult(
        "C1", d_eta.is_zero(), 1, "d(eta (x) 1) = 0",
        None if d_eta.is_zero() else format_chain(d_eta, g, module),
    )

    # (C2) the functional kills the image of the window
    failing = None
    upper = chain_basis(k + 1, g, module, truncation)
    for w in upper:
        value = _functional(xi, module, apply_differential(ChainElement({w: 1}), g, module))
        if value:
            failing = f"w = {format_chain(ChainElement({w: 1}), g, module)}, value {format_rational(value)}"
            break
    checks["C2"] = ConditionResult(
        "C2", failing is None, len(upper),
        "(xi (x) eps_A)(d w) = 0 on C_(k+1) up to A-degree N", failing,
    )

    # (C3) detection
    detected = _functional(xi, module, eta)
    checks["C3"] = ConditionResult(
        "C3", detected == 1, 1, "(xi (x) eps_A)(eta (x) 1) = 1",
        None if detected == 1 else f"value {format_rational(detected)}",
    )

    # independent non-boundary check
    if upper:
        d_upper = ce_differential(k + 1, g, module, truncation)
        rows = chain_basis(k, g, module, truncation + module.degree_raise)
        target = [eta.coefficient(key) for key in rows]
        non_boundary = solve(d_upper, target) is None
    else:
        non_boundary = not eta.is_zero()

    passed = all(c.passed for c in checks.values())
    solve_agrees = non_boundary if passed else True

    if passed and solve_agrees:
        state, reason = PASS, f"eta is a cycle and not a boundary up to A-degree {truncation}: H_{k} != 0"
    elif passed:
        state, reason = FAIL, "functional certificate passed but the linear solve found a preimage"
    else:
        failed = ", ".join(name for name, c in checks.items() if not c.passed)
        state, reason = FAIL, f"certificate conditions failed: {failed}"
    if state == FAIL:
        log.warning("certificate for %s failed: %s", L.name, reason)

    return Certificate(
        algebra=L.name,
        state=state,
        reason=reason,
        k=k,
        truncation=truncation,
        eta=eta,
        xi=xi,
        levi=list(g.basis[r:]),
        radical=list(g.basis[:r]),
        checks=checks,
        non_boundary=non_boundary,
        solve_agrees=solve_agrees,
        eta_text=format_chain(eta, g, module),
    )
