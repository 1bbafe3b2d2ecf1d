from fractions import Fraction

import pytest

from core.errors import PreconditionError
from core.liealg import Subspace
from homology import obstruction
from homology.chains import SmashCoefficientModule
from homology.obstruction import obstruction_certificate


def _assert_passes(cert, k):
    assert cert.state == "PASS", cert.reason
    assert cert.k == k
    assert [name for name in cert.checks] == ["C1", "C2", "C3"]
    assert all(c.passed for c in cert.checks.values())
    assert cert.non_boundary is True
    assert cert.solve_agrees is True


def test_sl2_whole_algebra(sl2):
    cert = obstruction_certificate(sl2, Subspace.whole(sl2), 2)
    _assert_passes(cert, 3)
    assert cert.levi == ["f", "h", "e"]
    assert cert.radical == []
    assert cert.eta_text == "1*f^h^e (x) 1"
    # C_4 = 0, so the image condition is vacuous
    assert cert.checks["C2"].checked == 0


def test_semisimple_defaults_to_the_whole_algebra(sl2):
    assert obstruction_certificate(sl2).state == "PASS"


@pytest.mark.parametrize("N", [2, 3, 4])
def test_gl2_certificate(gl2_file, N):
    cert = obstruction_certificate(gl2_file.algebra, gl2_file.levi, N)
    _assert_passes(cert, 3)
    assert cert.radical == ["z"]
    assert cert.truncation == N
    assert cert.checks["C2"].checked == N + 1


@pytest.mark.parametrize("N", [2, 3, 4])
def test_semidirect_certificate(semidirect_file, N):
    cert = obstruction_certificate(semidirect_file.algebra, semidirect_file.levi, N)
    _assert_passes(cert, 3)
    assert cert.levi == ["f", "h", "e"]
    assert cert.radical == ["x", "y"]


@pytest.mark.parametrize("name", ["heis3", "abelian3", "solvable2"])
def test_solvable_certificate_is_vacuous(load_fixture, name):
    cert = obstruction_certificate(load_fixture(name).algebra)
    assert cert.state == "VACUOUS"
    assert cert.k == 0
    assert cert.ok
    assert "solvable: no obstruction" in cert.reason


@pytest.mark.parametrize("scale", [Fraction(3, 2), Fraction(-5), Fraction(1, 7)])
def test_scaling_leaves_outcomes_unchanged(gl2_file, scale):
    base = obstruction_certificate(gl2_file.algebra, gl2_file.levi, 2)
    scaled = obstruction_certificate(gl2_file.algebra, gl2_file.levi, 2, scale=scale)
    assert scaled.state == base.state
    assert {n: c.passed for n, c in scaled.checks.items()} == {n: c.passed for n, c in base.checks.items()}
    assert list(scaled.eta.values()) == [scale]
    assert list(scaled.xi.values()) == [1 / scale]


def test_mixed_algebra_needs_a_levi_factor(gl2_file):
    with pytest.raises(PreconditionError):
        obstruction_certificate(gl2_file.algebra)


def test_unverified_levi_factor_is_rejected(gl2_file):
    L = gl2_file.algebra
    with pytest.raises(PreconditionError):
        obstruction_certificate(L, Subspace.from_indices(L, [1, 2]), 2)


def test_bad_parameters(gl2_file):
    with pytest.raises(PreconditionError):
        obstruction_certificate(gl2_file.algebra, gl2_file.levi, 0)
    with pytest.raises(PreconditionError):
        obstruction_certificate(gl2_file.algebra, gl2_file.levi, 2, scale=0)


def test_failed_detection_is_reported_with_its_value(monkeypatch, sl2):
    monkeypatch.setattr(SmashCoefficientModule, "augmentation", lambda self, key: Fraction(0))
    cert = obstruction_certificate(sl2, Subspace.whole(sl2), 2)
    assert cert.state == "FAIL"
    assert not cert.ok
    assert cert.checks["C1"].passed
    assert not cert.checks["C3"].passed
    assert cert.checks["C3"].counterexample == "value 0"
    assert cert.reason == "certificate conditions failed: C3"
    assert cert.solve_agrees is True


def test_solver_disagreement_fails_the_certificate(monkeypatch, gl2_file):
    monkeypatch.setattr(obstruction, "solve", lambda m, target: [Fraction(0)] * m.cols)
    cert = obstruction_certificate(gl2_file.algebra, gl2_file.levi, 2)
    assert all(c.passed for c in cert.checks.values())
    assert cert.non_boundary is False
    assert cert.solve_agrees is False
    assert cert.state == "FAIL"
    assert "linear solve found a preimage" in cert.reason
