# smash/smash_product.py

"""
Smash product A # H.

As a vector space A # H = A (x) H. Multiplication is twisted through

    tau = (mu_{H,A} (x) 1_H)(1_H (x) c_{H,A})(Delta_H (x) 1_A) : H (x) A -> A (x) H

    (a1 (x) h1)(a2 (x) h2) = (mu_A (x) mu_H)(a1 (x) tau(h1 (x) a2) (x) h2)

and A becomes a left A # H-module through A = (A # H) / Ker(1_A (x) eps).
"""

from typing import Hashable

from core.exactlin import LinearCombination, accumulate
from smash.module_algebra import ModuleAlgebraAction


class SmashElement(LinearCombination):
    """Sparse element of A # H: (A-monomial, H-key) -> Fraction."""


def pure(a_key, h_key, coeff=1) -> SmashElement:
    return SmashElement({(a_key, h_key): coeff})


def tensor(a: LinearCombination, h: LinearCombination) -> SmashElement:
    return SmashElement({(ak, hk): ca * ch for ak, ca in a.items() for hk, ch in h.items()})


def include_algebra(a: LinearCombination, act: ModuleAlgebraAction) -> SmashElement:
    """i1: a -> a (x) 1"""
    return tensor(a, act.hopf.one())


def include_hopf(h: LinearCombination, act: ModuleAlgebraAction) -> SmashElement:
    """i2: h -> 1 (x) h"""
    return tensor(act.algebra.one(), h)


def smash_one(act: ModuleAlgebraAction) -> SmashElement:
    return pure(act.algebra.one_key(), act.hopf.one_key())


# =========================
# tau
# =========================

def _tau_basis(h_key: Hashable, a_key, act: ModuleAlgebraAction) -> SmashElement:
    return SmashElement(act.twist_monomial(h_key, a_key))


def tau(h: LinearCombination, a: LinearCombination, act: ModuleAlgebraAction) -> SmashElement:
    pairs = []
    for h_key, ch in h.items():
        for a_key, ca in a.items():
            for key, c in _tau_basis(h_key, a_key, act).items():
                pairs.append((key, ch * ca * c))
    return accumulate(pairs, SmashElement)


# =========================
# Multiplication
# =========================

def smash_multiply(u: SmashElement, v: SmashElement, act: ModuleAlgebraAction) -> SmashElement:
    A, H = act.algebra, act.hopf
    pairs = []
    for (a1, h1), c1 in u.items():
        for (a2, h2), c2 in v.items():
            for (a_mid, h_mid), ct in _tau_basis(h1, a2, act).items():
                a_prod = A.multiply_monomials(a1, a_mid)
                h_prod = H.multiply_keys(h_mid, h2)
                for a_key, ca in a_prod.items():
                    for h_key, ch in h_prod.items():
                        pairs.append(((a_key, h_key), c1 * c2 * ct * ca * ch))
    return accumulate(pairs, SmashElement)


# =========================
# A as a left A # H-module
# =========================

def counit_projection(u: SmashElement, act: ModuleAlgebraAction) -> LinearCombination:
    """(1_A (x) eps)"""
    H = act.hopf
    return accumulate((a, c * H.counit_key(h)) for (a, h), c in u.items())


def module_action_on_A(u: SmashElement, b: LinearCombination, act: ModuleAlgebraAction) -> LinearCombination:
    """u . b = (1_A (x) eps)(u (b (x) 1))"""
    return counit_projection(smash_multiply(u, include_algebra(b, act), act), act)
