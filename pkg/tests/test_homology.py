from math import comb

import pytest

from conftest import LIE_FIXTURES
from core.errors import PreconditionError, TruncationOverflow
from core.liealg import verify_levi
from homology.betti import betti, betti_table, check_d_squared, euler_characteristic, top_differential_zero
from homology.chains import (
    AdjointModule,
    ChainElement,
    SmashCoefficientModule,
    TrivialModule,
    apply_differential,
    ce_differential,
    chain_basis,
    wedge_element,
)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("sl2", [1, 0, 0, 1]),
        ("heis3", [1, 2, 2, 1]),
        ("abelian3", [1, 3, 3, 1]),
        ("solvable2", [1, 1, 0]),
    ],
)
def test_betti_trivial_coefficients(load_fixture, name, expected):
    L = load_fixture(name).algebra
    table = betti_table(L)
    assert table.betti == expected
    assert [betti(L, TrivialModule(L), p) for p in range(L.dim + 1)] == expected


def test_betti_adjoint_sl2_vanishes(sl2):
    table = betti_table(sl2, AdjointModule(sl2))
    assert table.betti == [0, 0, 0, 0]
    assert table.chain_dims == [3, 9, 9, 3]
    assert table.ranks == [0, 3, 6, 3, 0]


def test_betti_single_thread_matches_pool(heis3):
    assert betti_table(heis3, workers=1).betti == betti_table(heis3, workers=4).betti


@pytest.mark.parametrize("name", ["sl2", "heis3", "abelian3"])
def test_poincare_duality(load_fixture, name):
    numbers = betti_table(load_fixture(name).algebra).betti
    assert numbers == numbers[::-1]
    assert euler_characteristic(numbers) == 0


@pytest.mark.parametrize("name", LIE_FIXTURES)
def test_b0_is_one_for_trivial_coefficients(load_fixture, name):
    L = load_fixture(name).algebra
    assert betti(L, TrivialModule(L), 0) == 1


def test_abelian_differentials_vanish(abelian3):
    for p in range(1, 4):
        d = ce_differential(p, abelian3, TrivialModule(abelian3))
        assert d.is_zero()
        assert (d.rows, d.cols) == (comb(3, p - 1), comb(3, p))


def test_heisenberg_degree_two(heis3):
    d = ce_differential(2, heis3, TrivialModule(heis3))
    # columns x^y, x^z, y^z; rows x, y, z
    assert d.to_lists() == [[0, 0, 0], [0, 0, 0], [-1, 0, 0]]


def test_apply_differential_matches_matrix(sl2):
    module = AdjointModule(sl2)
    d = ce_differential(2, sl2, module)
    rows = chain_basis(1, sl2, module)
    for col, key in enumerate(chain_basis(2, sl2, module)):
        image = apply_differential(ChainElement({key: 1}), sl2, module)
        assert [image.coefficient(r) for r in rows] == [d[(i, col)] for i in range(len(rows))]


def test_wedge_element_orders_with_sign():
    assert wedge_element((2, 0), "1") == {((0, 2), "1"): -1}
    assert wedge_element((1, 1), "1").is_zero()


@pytest.mark.parametrize("name", LIE_FIXTURES)
def test_d_squared_trivial(load_fixture, name):
    L = load_fixture(name).algebra
    assert check_d_squared(L).ok


@pytest.mark.parametrize("name", ["sl2", "heis3", "gl2", "sl2_semidirect_c2"])
def test_d_squared_adjoint(load_fixture, name):
    L = load_fixture(name).algebra
    assert check_d_squared(L, AdjointModule(L)).ok


@pytest.mark.parametrize("name, N", [("gl2", 3), ("sl2_semidirect_c2", 2)])
def test_d_squared_smash_module(load_fixture, name, N):
    loaded = load_fixture(name)
    dec = verify_levi(loaded.algebra, loaded.levi).decomposition
    report = check_d_squared(dec.algebra, SmashCoefficientModule(dec, N))
    assert report.ok
    assert report.window == N
    assert report.checked == list(range(1, dec.algebra.dim))


def test_smash_module_actions(semidirect_file):
    dec = verify_levi(semidirect_file.algebra, semidirect_file.levi).decomposition
    module = SmashCoefficientModule(dec, 2)
    x, y, f, h, e = range(5)
    # radical generators multiply, Levi generators act by brackets
    assert module.act(x, (0, 1)) == {(1, 1): 1}
    assert module.act(f, (1, 0)) == {(0, 1): 1}
    assert module.act(h, (0, 0)).is_zero()
    assert module.augmentation((0, 0)) == 1
    assert module.augmentation((1, 0)) == 0


def test_smash_module_window_is_enforced(gl2_file):
    dec = verify_levi(gl2_file.algebra, gl2_file.levi).decomposition
    module = SmashCoefficientModule(dec, 2)
    with pytest.raises(TruncationOverflow):
        ce_differential(1, dec.algebra, module, max_degree=3)
    with pytest.raises(PreconditionError):
        betti(dec.algebra, module, 1)


@pytest.mark.parametrize("name", ["sl2", "sl2xsl2"])
def test_top_differential_zero(load_fixture, name):
    report = top_differential_zero(load_fixture(name).algebra)
    assert report.ok
    assert report.nonzero_entry is None


@pytest.mark.parametrize("name", ["heis3", "gl2"])
def test_top_differential_needs_semisimple(load_fixture, name):
    with pytest.raises(PreconditionError):
        top_differential_zero(load_fixture(name).algebra)


def test_ce_differential_degree_range(sl2):
    with pytest.raises(PreconditionError):
        ce_differential(0, sl2, TrivialModule(sl2))
    with pytest.raises(PreconditionError):
        ce_differential(4, sl2, TrivialModule(sl2))
