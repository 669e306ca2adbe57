import math

import numpy as np
import pytest

from schubertq.combinatorics import complement, enumerate_basis
from schubertq.qh import c1_matrix, operator_matrix
from schubertq.spectral import (
    IterationError,
    c1_perron_root,
    c1_spectrum,
    conjugation_closed,
    delta0_closed_form,
    eigenbasis_lg,
    eigenbasis_og,
    eigenvector_rank,
    perron_root,
    property_o_check,
    rietsch_check,
    verify_eigenpairs,
)
from schubertq.sympoly import qtilde, zeta_point


def multiset_close(a, b, tol):
    pool = list(b)
    for z in a:
        d = [abs(z - w) for w in pool]
        i = int(np.argmin(d))
        if d[i] > tol:
            return False
        pool.pop(i)
    return not pool


def test_lg1_eigenbasis():
    pairs = eigenbasis_lg(1)
    assert len(pairs) == 2
    assert sorted(round(p.eigenvalues[0].real, 12) for p in pairs) == [-1, 1]
    assert verify_eigenpairs("lg", 1, tol=1e-12) <= 1e-12


def test_lg2_c1_spectrum():
    spec = c1_spectrum("lg", 2)
    assert len(spec.values) == 4
    assert spec.delta0 == pytest.approx(6 * 2 ** (-1 / 3), abs=1e-12)
    assert spec.delta0 == pytest.approx(2 ** (-1 / 3) * 3 / math.sin(math.pi / 6), abs=1e-12)


def test_og_small_spectra():
    v1 = sorted(c1_spectrum("og", 1).values, key=lambda z: z.real)
    assert np.allclose(v1, [-2, 2], atol=1e-12)
    v2 = c1_spectrum("og", 2).values
    assert multiset_close(v2, [4, -4, 4j, -4j], 1e-10)


@pytest.mark.parametrize("n", range(1, 8))
def test_eigenbasis_sizes(n):
    assert len(eigenbasis_lg(n)) == 2 ** n
    assert len(eigenbasis_og(n)) == 2 ** n


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 7))
def test_eigenvectors_independent(space, n):
    pairs = eigenbasis_lg(n) if space == "lg" else eigenbasis_og(n)
    assert eigenvector_rank(pairs) == 2 ** n


def test_eigenvector_coordinates_use_complements():
    pair = eigenbasis_lg(2)[0]
    X = zeta_point(pair.index, 0.5 ** (1 / 3))
    coords = pair.as_dict(2)
    for nu in enumerate_basis(2):
        assert abs(coords[complement(nu, 2)] - qtilde(nu, X)) < 1e-12


def test_verify_examples():
    assert verify_eigenpairs("og", 2) <= 1e-8
    assert verify_eigenpairs("lg", 2) <= 1e-8


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 9))
def test_eigenpair_residuals(space, n):
    assert verify_eigenpairs(space, n, tol=1e-8) <= 1e-8


def test_verify_raises_on_wrong_eigenvalues():
    pairs = eigenbasis_og(2)
    pairs[0].eigenvalues = tuple(v + 1 for v in pairs[0].eigenvalues)
    with pytest.raises(AssertionError):
        verify_eigenpairs("og", 2, pairs=pairs)


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 7))
def test_closed_spectrum_matches_dense_eigensolver(space, n):
    dense = np.linalg.eigvals(c1_matrix(space, n).entries.astype(float))
    closed = c1_spectrum(space, n).values
    scale = delta0_closed_form(space, n)
    assert multiset_close(closed, dense, 1e-6 * scale)


def test_perron_examples():
    assert perron_root(c1_matrix("og", 1).entries) == pytest.approx(2, abs=1e-12)
    assert perron_root(c1_matrix("og", 2).entries) == pytest.approx(4, abs=1e-12)
    assert perron_root(c1_matrix("og", 3).entries) == pytest.approx(7.5595, abs=1e-4)
    assert perron_root(c1_matrix("og", 3).entries) == pytest.approx(2 ** (1 / 3) * 6, abs=1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_perron_random_positive_matrix(seed):
    A = np.random.default_rng(seed).uniform(0, 1, size=(12, 12))
    rho = max(np.linalg.eigvals(A).real)
    assert perron_root(A) == pytest.approx(rho, rel=1e-10)


def test_perron_errors():
    with pytest.raises(ValueError):
        perron_root(-np.ones((2, 2)))
    with pytest.raises(ValueError):
        perron_root(np.ones((2, 3)))
    with pytest.raises(IterationError) as info:
        perron_root(c1_matrix("lg", 4).entries, max_iter=2)
    assert info.value.estimate > 0


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 9))
def test_perron_matches_closed_form(space, n):
    assert abs(c1_perron_root(space, n) - delta0_closed_form(space, n)) <= 1e-7


def test_closed_form_examples():
    assert delta0_closed_form("lg", 1) == pytest.approx(2, abs=1e-12)
    assert delta0_closed_form("og", 2) == pytest.approx(4, abs=1e-12)
    assert delta0_closed_form("og", 4) == pytest.approx(12.43, abs=5e-3)


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 11))
def test_spectrum_structure(space, n):
    spec = c1_spectrum(space, n)
    assert len(spec.values) == 2 ** n
    assert spec.delta0 == pytest.approx(delta0_closed_form(space, n), abs=1e-9)
    assert int(np.sum(np.abs(spec.values - spec.delta0) <= 1e-9)) == 1
    assert conjugation_closed(spec.values)


def test_conjugation_closed_detects_asymmetry():
    assert not conjugation_closed(np.array([1 + 1j, 2]))


@pytest.mark.parametrize("n", range(1, 13))
def test_rietsch(n):
    I0, value = rietsch_check(n)
    assert abs(value.imag) <= 1e-10
    assert abs(value.real - 1 / math.sin(math.pi / (2 * n))) <= 1e-9
    assert sum(I0.twice) == 0


def test_rietsch_examples():
    assert rietsch_check(1)[1] == pytest.approx(1)
    assert rietsch_check(2)[1] == pytest.approx(math.sqrt(2))
    assert rietsch_check(4)[1].real == pytest.approx(2.6131, abs=1e-4)


def test_property_o_examples():
    og2 = property_o_check("og", 2)
    assert og2.passed and og2.fano_index == 4
    assert multiset_close(og2.top_values, [4, 4j, -4, -4j], 1e-10)
    og1 = property_o_check("og", 1)
    assert og1.passed and multiset_close(og1.top_values, [2, -2], 1e-12)
    lg2 = property_o_check("lg", 2)
    assert lg2.passed and lg2.fano_index == 3


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", range(1, 9))
def test_property_o(space, n):
    rep = property_o_check(space, n)
    assert rep.is_eigenvalue and rep.simple and rep.roots_of_unity
    # graded operators: the whole r-th-root orbit of delta0 occurs
    assert len(rep.top_values) == rep.fano_index


def test_pieri_eigenvalues_match_dense_for_each_k():
    for k in range(1, 4):
        dense = np.linalg.eigvals(operator_matrix("og", 3, k).entries.astype(float))
        closed = [p.eigenvalues[k - 1] for p in eigenbasis_og(3)]
        assert multiset_close(closed, dense, 1e-8)
