import random
from math import comb

import pytest

from config.settings import RANDOM_SEED
from core.uea import (
    TensorElement,
    UeaElement,
    coproduct,
    counit_antipode,
    enveloping_algebra,
    monomials_up_to,
    pbw_multiply,
    random_element,
    truncate,
)
from smash.checks import check_hopf_axioms

F, H, E = (1, 0, 0), (0, 1, 0), (0, 0, 1)
ONE = (0, 0, 0)


def test_straightening_sl2(sl2):
    U = enveloping_algebra(sl2)
    e, f, h = U.generator(2), U.generator(0), U.generator(1)
    # e f = f e + h
    assert pbw_multiply(e, f, sl2) == {(1, 0, 1): 1, H: 1}
    # h f = f h - 2 f
    assert pbw_multiply(h, f, sl2) == {(1, 1, 0): 1, F: -2}
    # already ordered words are untouched
    assert pbw_multiply(f, e, sl2) == {(1, 0, 1): 1}


def test_straightening_heisenberg(heis3):
    U = enveloping_algebra(heis3)
    x, y = U.generator(0), U.generator(1)
    assert U.multiply(y, x) == {(1, 1, 0): 1, (0, 0, 1): -1}
    assert U.commutator(x, y) == {(0, 0, 1): 1}


def test_commutator_of_generators_is_the_bracket(sl2):
    U = enveloping_algebra(sl2)
    for i in range(3):
        for j in range(3):
            expected = UeaElement({
                tuple(int(t == k) for t in range(3)): c for k, c in sl2.bracket_basis(i, j).items()
            })
            assert U.commutator(U.generator(i), U.generator(j)) == expected


def test_power_and_associativity_sample(sl2):
    U = enveloping_algebra(sl2)
    e = U.generator(2)
    assert U.power(e, 3) == {(0, 0, 3): 1}
    rng = random.Random(RANDOM_SEED)
    for _ in range(30):
        x, y, z = (random_element(U, rng, 2) for _ in range(3))
        assert U.multiply(U.multiply(x, y), z) == U.multiply(x, U.multiply(y, z))


def test_coproduct_of_generator_and_square(sl2):
    U = enveloping_algebra(sl2)
    assert coproduct(U.generator(0), sl2) == {(F, ONE): 1, (ONE, F): 1}
    assert coproduct(U.monomial((2, 0, 0)), sl2) == {
        ((2, 0, 0), ONE): 1,
        (F, F): 2,
        (ONE, (2, 0, 0)): 1,
    }


def test_coproduct_is_multiplicative(sl2):
    U = enveloping_algebra(sl2)
    x = U.multiply(U.generator(2), U.generator(0))
    product = U.tensor_multiply(U.coproduct(U.generator(2)), U.coproduct(U.generator(0)))
    assert U.coproduct(x) == product


def test_counit_and_antipode(sl2):
    U = enveloping_algebra(sl2)
    x = U.one() + U.generator(2).scale(5)
    eps, s = counit_antipode(x, sl2)
    assert eps == 1
    assert s == {ONE: 1, E: -5}

    # S(f e) = S(e) S(f) = e f = f e + h
    _, s_fe = counit_antipode(U.monomial((1, 0, 1)), sl2)
    assert s_fe == {(1, 0, 1): 1, H: 1}


def test_truncate_drops_high_degrees(sl2):
    x = UeaElement({ONE: 1, E: 2, (0, 0, 3): 4})
    assert truncate(x, 1) == {ONE: 1, E: 2}
    assert x.degree() == 3


def test_tensor_flip():
    t = TensorElement({((1,), (0,)): 2})
    assert t.flip() == {((0,), (1,)): 2}


@pytest.mark.parametrize("n, N", [(3, 2), (2, 4), (5, 3), (0, 3)])
def test_pbw_basis_size(n, N):
    assert len(monomials_up_to(n, N)) == comb(n + N, N)


@pytest.mark.parametrize("name", ["sl2", "heis3", "abelian3", "gl2", "sl2_semidirect_c2"])
def test_hopf_axioms(load_fixture, name):
    reports = check_hopf_axioms(load_fixture(name).algebra)
    names = [r.name for r in reports]
    assert names == ["associativity", "pbw_independence", "coassociativity", "counit", "antipode", "cocommutativity"]
    failed = [r for r in reports if not r.ok]
    assert not failed, failed
    assert all(r.checked >= 200 for r in reports if r.name != "pbw_independence")
