# smash/checks.py

"""
Identity checks for smash products and Hopf structures.

Every check returns a CheckReport; a failing identity is a result, not an
exception. Checks run exhaustively over the truncated bases unless a
sample size is given.
"""

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional

from config.settings import HOPF_CHECK_DEGREE, RANDOM_CASES, RANDOM_SEED
from core.errors import PreconditionError, TruncationOverflow
from core.exactlin import LinearCombination, QMatrix, rank
from core.liealg import LeviDecomposition, LieAlgebra, Subspace, verify_levi
from core.uea import (
    EnvelopingAlgebra,
    UeaElement,
    antipode_convolutions,
    apply_left_counit,
    apply_right_counit,
    enveloping_algebra,
    left_coassociator,
    monomial_degree,
    random_element,
    right_coassociator,
)
from smash.hopf import PRIMITIVE, EnvelopingHopf, GroupHopf, HopfAlgebraHandle
from smash.module_algebra import ModuleAlgebraAction, levi_action
from smash.smash_product import (
    SmashElement,
    counit_projection,
    include_algebra,
    include_hopf,
    module_action_on_A,
    pure,
    smash_multiply,
    smash_one,
    tau,
    tensor,
)
from utils.log import get_logger

log = get_logger("smash")


@dataclass
class CheckReport:
    name: str
    state: str                        # PASS | FAIL
    checked: int
    counterexample: Optional[str] = None
    reason: str = ""
    details: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.state == "PASS"


def _passed(name: str, checked: int, reason: str, details=None) -> CheckReport:
    return CheckReport(name, "PASS", checked, None, reason, details or {})


def _failed(name: str, checked: int, counterexample: str, reason: str, details=None) -> CheckReport:
    log.info("%s failed: %s", name, counterexample)
    return CheckReport(name, "FAIL", checked, counterexample, reason, details or {})


def _fmt(act: ModuleAlgebraAction, h_key=None, a_key=None) -> str:
    parts = []
    if h_key is not None:
        parts.append(f"h={act.hopf.format_key(h_key)}")
    if a_key is not None:
        parts.append(f"a={act.algebra.format_key(a_key)}")
    return ", ".join(parts)


def _a_pairs(act: ModuleAlgebraAction):
    """Pairs of A-basis monomials whose product stays in the window."""
    A = act.algebra
    basis = A.basis()
    for a in basis:
        for b in basis:
            if A.degree(a) + A.degree(b) <= A.max_degree:
                yield a, b


# =========================
# (1 (x) eps) tau = mu_{H,A}
# =========================

def check_counit_tau(
    act: ModuleAlgebraAction,
    samples: Optional[int] = None,
    h_degree: int = HOPF_CHECK_DEGREE,
    seed: int = RANDOM_SEED,
) -> CheckReport:
    pairs = list(product(act.h_basis(h_degree), act.a_basis()))
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)

    for count, (h_key, a_key) in enumerate(pairs, start=1):
        h = act.hopf.element(h_key)
        a = LinearCombination.basis(a_key)
        left = counit_projection(tau(h, a, act), act)
        if left != act.act(h, a):
            return _failed("counit_tau", count, _fmt(act, h_key, a_key), "(1 (x) eps) tau(h (x) a) != h.a")

    return _passed("counit_tau", len(pairs), "(1 (x) eps) tau = mu_{H,A} on every checked pair")


# =========================
# Module-algebra laws
# =========================

def check_module_algebra(act: ModuleAlgebraAction) -> CheckReport:
    """
    Derivation law for primitives, automorphism law for group-likes,
    unit law, and Lie compatibility of the generator actions.
    """
    A, H = act.algebra, act.hopf
    checked = 0

    for h_key, kind in H.generators():
        h = H.element(h_key)
        unit_image = act.act(h, A.one())
        if unit_image != A.one().scale(H.counit_key(h_key)):
            return _failed("module_algebra", checked, _fmt(act, h_key), "h.1 != eps(h) 1")

        for a_key, b_key in _a_pairs(act):
            checked += 1
            a, b = LinearCombination.basis(a_key), LinearCombination.basis(b_key)
            lhs = act.act(h, A.multiply(a, b))
            ha, hb = act.act(h, a), act.act(h, b)
            if kind == PRIMITIVE:
                rhs = A.multiply(ha, b) + A.multiply(a, hb)
            else:
                rhs = A.multiply(ha, hb)
            if lhs != rhs:
                law = "derivation" if kind == PRIMITIVE else "automorphism"
                return _failed(
                    "module_algebra", checked,
                    f"{_fmt(act, h_key, a_key)}, b={A.format_key(b_key)}",
                    f"{law} law fails",
                )

    if isinstance(H, EnvelopingHopf):
        lie = H.lie
        for i in range(lie.dim):
            for j in range(i + 1, lie.dim):
                bracket = LinearCombination({H.generator_key(k): c for k, c in lie.bracket_basis(i, j).items()})
                Xi, Xj = H.element(H.generator_key(i)), H.element(H.generator_key(j))
                for a_key in A.basis():
                    checked += 1
                    a = LinearCombination.basis(a_key)
                    lhs = act.act(bracket, a)
                    rhs = act.act(Xi, act.act(Xj, a)) - act.act(Xj, act.act(Xi, a))
                    if lhs != rhs:
                        return _failed(
                            "module_algebra", checked,
                            f"[{lie.basis[i]}, {lie.basis[j]}] on a={A.format_key(a_key)}",
                            "action of [X,Y] differs from the commutator of actions",
                        )

    return _passed("module_algebra", checked, "A is an H-module algebra within truncation")


# =========================
# Commutation identities
# =========================

def check_commutation_identities(act: ModuleAlgebraAction) -> CheckReport:
    """
    primitive h:   (1 (x) h)(a (x) 1) = h.a (x) 1 + a (x) h
    group-like g:  (1 (x) g)(a (x) 1)(1 (x) g^-1) = g.a (x) 1
    """
    A, H = act.algebra, act.hopf
    one_a, one_h = A.one_key(), H.one_key()
    checked = 0

    if isinstance(H, GroupHopf):
        group = H.group
        for g in range(group.order):
            g_inv = group.inverse[g]
            for a_key in A.basis():
                checked += 1
                a_el = LinearCombination.basis(a_key)
                ga = act.act(H.element(g), a_el)
                left = smash_multiply(pure(one_a, g), pure(a_key, one_h), act)
                if left != tensor(ga, H.element(g)):
                    return _failed("commutation", checked, _fmt(act, g, a_key), "(1 (x) g)(a (x) 1) != g.a (x) g")
                conj = smash_multiply(left, pure(one_a, g_inv), act)
                if conj != include_algebra(ga, act):
                    return _failed("commutation", checked, _fmt(act, g, a_key), "conjugation by g differs from g.a")
        return _passed("commutation", checked, "group-like conjugation identity holds")

    for h_key, kind in H.generators():
        if kind != PRIMITIVE:
            continue
        for a_key in A.basis():
            checked += 1
            ha = act.act(H.element(h_key), LinearCombination.basis(a_key))
            left = smash_multiply(pure(one_a, h_key), pure(a_key, one_h), act)
            right = include_algebra(ha, act) + pure(a_key, h_key)
            if left != right:
                return _failed("commutation", checked, _fmt(act, h_key, a_key), "(1 (x) h)(a (x) 1) != h.a (x) 1 + a (x) h")

    return _passed("commutation", checked, "primitive commutation identity holds")


# =========================
# Algebra structure of A # H
# =========================

def _random_pure(act: ModuleAlgebraAction, rng, h_degree: int, a_budget: int):
    A = act.algebra
    a_choices = [a for a in A.basis() if A.degree(a) <= a_budget]
    a_key = rng.choice(a_choices)
    h_key = rng.choice(act.h_basis(h_degree))
    return pure(a_key, h_key, rng.randint(1, 3)), A.degree(a_key)


def check_smash_associativity(
    act: ModuleAlgebraAction,
    cases: int = RANDOM_CASES,
    h_degree: int = 2,
    seed: int = RANDOM_SEED,
) -> CheckReport:
    rng = random.Random(seed)
    N = act.algebra.max_degree
    for count in range(1, cases + 1):
        u, du = _random_pure(act, rng, h_degree, N)
        v, dv = _random_pure(act, rng, h_degree, N - du)
        w, _ = _random_pure(act, rng, h_degree, N - du - dv)
        left = smash_multiply(smash_multiply(u, v, act), w, act)
        right = smash_multiply(u, smash_multiply(v, w, act), act)
        if left != right:
            return _failed("smash_associativity", count, f"u={u!r}, v={v!r}, w={w!r}", "(uv)w != u(vw)")
    return _passed("smash_associativity", cases, "smash multiplication associative on sampled triples")


def check_inclusions(act: ModuleAlgebraAction, h_degree: int = 2) -> CheckReport:
    """i1 and i2 are unital algebra homomorphisms."""
    A, H = act.algebra, act.hopf
    one = smash_one(act)
    checked = 0

    for a_key, b_key in _a_pairs(act):
        checked += 1
        a, b = LinearCombination.basis(a_key), LinearCombination.basis(b_key)
        if smash_multiply(include_algebra(a, act), include_algebra(b, act), act) != include_algebra(A.multiply(a, b), act):
            return _failed("inclusions", checked, f"a={A.format_key(a_key)}, b={A.format_key(b_key)}", "i1 not multiplicative")

    basis = act.h_basis(h_degree)
    for h_key, k_key in product(basis, basis):
        checked += 1
        h, k = H.element(h_key), H.element(k_key)
        if smash_multiply(include_hopf(h, act), include_hopf(k, act), act) != include_hopf(H.multiply(h, k), act):
            return _failed("inclusions", checked, f"h={H.format_key(h_key)}, k={H.format_key(k_key)}", "i2 not multiplicative")

    for a_key in A.basis():
        for h_key in basis:
            checked += 1
            x = pure(a_key, h_key)
            if smash_multiply(one, x, act) != x or smash_multiply(x, one, act) != x:
                return _failed("inclusions", checked, _fmt(act, h_key, a_key), "1 (x) 1 is not a two-sided unit")

    return _passed("inclusions", checked, "i1 and i2 are unital algebra homomorphisms")


def check_group_table(act: ModuleAlgebraAction) -> CheckReport:
    H = act.hopf
    if not isinstance(H, GroupHopf):
        raise PreconditionError("group table check needs a group-algebra action")
    group = H.group
    one_a = act.algebra.one_key()
    checked = 0
    for g in range(group.order):
        for h in range(group.order):
            checked += 1
            if smash_multiply(pure(one_a, g), pure(one_a, h), act) != pure(one_a, group.mult(g, h)):
                return _failed("group_table", checked, f"{group.label(g)} * {group.label(h)}", "smash product disagrees with the Cayley table")
    return _passed("group_table", checked, "1 (x) G reproduces the group multiplication table")


def check_module_law(
    act: ModuleAlgebraAction,
    cases: int = RANDOM_CASES,
    h_degree: int = 2,
    seed: int = RANDOM_SEED,
) -> CheckReport:
    """
    (a (x) 1).b = ab,  (1 (x) h).b = h.b  on all basis data, and
    (uv).b = u.(v.b) on sampled u, v, b.
    """
    A, H = act.algebra, act.hopf
    checked = 0

    for a_key, b_key in _a_pairs(act):
        checked += 1
        a, b = LinearCombination.basis(a_key), LinearCombination.basis(b_key)
        if module_action_on_A(include_algebra(a, act), b, act) != A.multiply(a, b):
            return _failed("module_law", checked, f"a={A.format_key(a_key)}, b={A.format_key(b_key)}", "(a (x) 1).b != ab")

    for h_key in act.h_basis(h_degree):
        for b_key in A.basis():
            checked += 1
            h, b = H.element(h_key), LinearCombination.basis(b_key)
            if module_action_on_A(include_hopf(h, act), b, act) != act.act(h, b):
                return _failed("module_law", checked, _fmt(act, h_key, b_key), "(1 (x) h).b != h.b")

    rng = random.Random(seed)
    N = A.max_degree
    for _ in range(cases):
        checked += 1
        u, du = _random_pure(act, rng, h_degree, N)
        v, dv = _random_pure(act, rng, h_degree, N - du)
        b_key = rng.choice([k for k in A.basis() if A.degree(k) <= N - du - dv])
        b = LinearCombination.basis(b_key)
        left = module_action_on_A(smash_multiply(u, v, act), b, act)
        right = module_action_on_A(u, module_action_on_A(v, b, act), act)
        if left != right:
            return _failed("module_law", checked, f"u={u!r}, v={v!r}, b={A.format_key(b_key)}", "(uv).b != u.(v.b)")

    return _passed("module_law", checked, "A is a left A # H-module within truncation")


# =========================
# Projectivity retraction (group algebras)
# =========================

def check_retraction(act: ModuleAlgebraAction) -> CheckReport:
    """
    x0 = |G|^-1 sum_g g and rho(a) = a (x) x0. Verifies, in order:
      eps(x0) = 1, h x0 = eps(h) x0, rho(ab) = a.rho(b),
      rho(h.a) = h.rho(a), (1 (x) eps) rho = id.
    """
    H = act.hopf
    if not isinstance(H, GroupHopf):
        raise PreconditionError("the retraction check needs a group-algebra action")

    A = act.algebra
    x0 = H.integral()
    details = {}
    checked = 0

    def rho(a: LinearCombination) -> SmashElement:
        return tensor(a, x0)

    def stop(identity: str, counterexample: str) -> CheckReport:
        details[identity] = False
        return _failed("retraction", checked, counterexample, f"{identity} fails", details)

    checked += 1
    if H.counit(x0) != 1:
        return stop("eps(x0) = 1", f"eps(x0) = {H.counit(x0)}")
    details["eps(x0) = 1"] = True

    for h_key in H.basis():
        checked += 1
        h = H.element(h_key)
        if H.multiply(h, x0) != x0.scale(H.counit(h)):
            return stop("h x0 = eps(h) x0", f"h={H.format_key(h_key)}")
    details["h x0 = eps(h) x0"] = True

    for a_key, b_key in _a_pairs(act):
        checked += 1
        a, b = LinearCombination.basis(a_key), LinearCombination.basis(b_key)
        if rho(A.multiply(a, b)) != smash_multiply(include_algebra(a, act), rho(b), act):
            return stop("rho(ab) = a.rho(b)", f"a={A.format_key(a_key)}, b={A.format_key(b_key)}")
    details["rho(ab) = a.rho(b)"] = True

    for h_key in H.basis():
        for a_key in A.basis():
            checked += 1
            h, a = H.element(h_key), LinearCombination.basis(a_key)
            if rho(act.act(h, a)) != smash_multiply(include_hopf(h, act), rho(a), act):
                return stop("rho(h.a) = h.rho(a)", _fmt(act, h_key, a_key))
    details["rho(h.a) = h.rho(a)"] = True

    for a_key in A.basis():
        checked += 1
        a = LinearCombination.basis(a_key)
        if counit_projection(rho(a), act) != a:
            return stop("(1 (x) eps) rho = id", f"a={A.format_key(a_key)}")
    details["(1 (x) eps) rho = id"] = True

    return _passed("retraction", checked, f"rho(a) = a (x) x0 with x0 = (1/{H.group.order}) sum_g g splits 1 (x) eps", details)


# =========================
# Hopf structure
# =========================

def check_hopf_generation(hopf: HopfAlgebraHandle, max_degree: int = HOPF_CHECK_DEGREE) -> CheckReport:
    """H is spanned by products of primitive and group-like elements."""
    checked = 0
    gens = hopf.generators()

    for key, kind in gens:
        checked += 1
        x = hopf.element(key)
        if kind == PRIMITIVE:
            expected = tensor(x, hopf.one()) + tensor(hopf.one(), x)
        else:
            expected = tensor(x, x)
        if LinearCombination(hopf.coproduct(x)) != LinearCombination(expected):
            return _failed("generation", checked, hopf.format_key(key), f"generator is not {kind}")

    if isinstance(hopf, GroupHopf):
        group = hopf.group
        reached = {group.identity}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in group.generator_indices:
                    new = group.mult(s, g)
                    if new not in reached:
                        reached.add(new)
                        nxt.append(new)
            frontier = nxt
        checked += group.order
        if len(reached) != group.order:
            return _failed("generation", checked, f"{group.order - len(reached)} elements unreached", "generators do not generate G")
        return _passed("generation", checked, "QG is spanned by group-like products of the generators")

    for key in hopf.basis(max_degree):
        checked += 1
        product_el = hopf.one()
        for i, exp in enumerate(key):
            for _ in range(exp):
                product_el = hopf.multiply(product_el, hopf.element(hopf.generator_key(i)))
        if product_el != hopf.element(key):
            return _failed("generation", checked, hopf.format_key(key), "PBW monomial is not the ordered product of primitives")

    return _passed("generation", checked, "every PBW monomial is an ordered product of primitive generators")


def check_hopf_axioms(
    lie: LieAlgebra,
    cases: int = RANDOM_CASES,
    max_degree: int = HOPF_CHECK_DEGREE,
    seed: int = RANDOM_SEED,
) -> List[CheckReport]:
    """
    Associativity (random triples), PBW independence surrogate, and
    coassociativity / counit / antipode / cocommutativity on every
    monomial of degree <= max_degree, plus random elements up to `cases`.
    """
    U: EnvelopingAlgebra = enveloping_algebra(lie)
    rng = random.Random(seed)
    n = lie.dim
    reports = []

    # associativity
    for count in range(1, cases + 1):
        x, y, z = (random_element(U, rng, max_degree) for _ in range(3))
        if U.multiply(U.multiply(x, y), z) != U.multiply(x, U.multiply(y, z)):
            reports.append(_failed("associativity", count, f"x={x!r}, y={y!r}, z={z!r}", "(xy)z != x(yz)"))
            break
    else:
        reports.append(_passed("associativity", cases, "PBW product associative"))

    # left multiplication by a generator never kills a nonzero basis element
    failed = None
    checked = 0
    for m in U.basis(max_degree):
        for i in range(n):
            checked += 1
            if U.multiply(U.generator(i), U.monomial(m)).is_zero():
                failed = f"e_{lie.basis[i]} * {m}"
                break
        if failed:
            break
    reports.append(
        _failed("pbw_independence", checked, failed, "product vanished") if failed
        else _passed("pbw_independence", checked, "generator products of basis monomials stay nonzero")
    )

    samples = [U.monomial(m) for m in U.basis(max_degree)]
    samples += [random_element(U, rng, max_degree) for _ in range(max(0, cases - len(samples)))]

    axioms = {
        "coassociativity": lambda x: left_coassociator(U, x) == right_coassociator(U, x),
        "counit": lambda x: apply_left_counit(U.coproduct(x), n) == x == apply_right_counit(U.coproduct(x), n),
        "antipode": lambda x: all(side == U.one().scale(U.counit(x)) for side in antipode_convolutions(U, x)),
        "cocommutativity": lambda x: U.coproduct(x).flip() == U.coproduct(x),
    }
    for name, holds in axioms.items():
        for count, x in enumerate(samples, start=1):
            if not holds(x):
                reports.append(_failed(name, count, repr(x), f"{name} axiom fails"))
                break
        else:
            reports.append(_passed(name, len(samples), f"{name} holds"))

    return reports


# =========================
# U(g) = U(rad) # U(levi), truncated
# =========================

@dataclass
class LeviIsoReport:
    state: str                    # PASS | FAIL
    verified_degree: int
    basis_size: int
    phi_rank: int
    pairs_checked: int
    counterexample: Optional[str]
    reason: str

    @property
    def ok(self) -> bool:
        return self.state == "PASS"


def levi_phi(decomposition: LeviDecomposition, u: SmashElement) -> UeaElement:
    """Phi(x (x) y) = x y in U(g), PBW order radical-first."""
    U = enveloping_algebra(decomposition.algebra)
    n = decomposition.algebra.dim
    r = decomposition.radical_dim
    total = UeaElement()
    for (a_key, h_key), c in u.items():
        x = U.monomial(tuple(a_key) + (0,) * (n - r))
        y = U.monomial((0,) * r + tuple(h_key))
        total = total + U.multiply(x, y).scale(c)
    return total


def levi_smash_iso_check(L: LieAlgebra, h: Subspace, max_degree: int) -> LeviIsoReport:
    levi = verify_levi(L, h)
    if not levi.ok:
        raise PreconditionError(f"Levi decomposition not verified: {levi.reason}")

    dec = levi.decomposition
    act = levi_action(dec, max_degree)
    U = enveloping_algebra(dec.algebra)
    k = dec.levi_dim

    source = [
        (a_key, h_key)
        for a_key in act.algebra.basis()
        for h_key in act.hopf.basis(max_degree - monomial_degree(a_key))
    ]
    target = U.basis(max_degree)
    target_index = {m: i for i, m in enumerate(target)}

    # (a) linear bijection between truncated PBW bases
    entries = {}
    for col, (a_key, h_key) in enumerate(source):
        for m, c in levi_phi(dec, pure(a_key, h_key)).items():
            entries[(target_index[m], col)] = c
    phi_matrix = QMatrix(len(target), len(source), entries)
    phi_rank = rank(phi_matrix)

    if len(source) != len(target) or phi_rank != len(target):
        return LeviIsoReport(
            "FAIL", max_degree, len(target), phi_rank, 0, None,
            f"Phi is not a bijection: {len(source)} source vs {len(target)} target, rank {phi_rank}",
        )

    # (b) multiplicativity on basis pairs of combined degree <= N
    def degree(key):
        return monomial_degree(key[0]) + monomial_degree(key[1])

    checked = 0
    for u_key in source:
        for v_key in source:
            if degree(u_key) + degree(v_key) > max_degree:
                continue
            checked += 1
            u, v = pure(*u_key), pure(*v_key)
            try:
                left = levi_phi(dec, smash_multiply(u, v, act))
            except TruncationOverflow as exc:
                return LeviIsoReport("FAIL", max_degree, len(target), phi_rank, checked, f"u={u!r}, v={v!r}", str(exc))
            right = U.multiply(levi_phi(dec, u), levi_phi(dec, v))
            if left != right:
                return LeviIsoReport(
                    "FAIL", max_degree, len(target), phi_rank, checked,
                    f"u={u!r}, v={v!r}", "Phi(uv) != Phi(u) Phi(v)",
                )

    reason = f"U({L.name}) = U(rad) # U(levi) verified up to degree {max_degree}"
    if k == 0:
        reason += " (empty Levi factor: Phi is the identity)"
    return LeviIsoReport("PASS", max_degree, len(target), phi_rank, checked, None, reason)
