from fractions import Fraction as F

import numpy as np
import pytest

from _gen import admissible_params, rat, regular_label
from ncqm import (
    BoppParams,
    BoppRealization,
    DegenerateLabel,
    InadmissibleParams,
    RealizationMatrix,
    SectorLabel,
    ZeroHbar,
    a_coefficient,
    bopp_matrix,
    omega_nc,
    push_commutators,
    realization_transfer,
    verify_sector_invariance,
)


def test_a_coefficient(label):
    assert a_coefficient(label, 2) == F(-1, 2)
    assert a_coefficient(label, 1) == 0
    with pytest.raises(InadmissibleParams):
        a_coefficient(label, 6)


def test_bopp_matrix_r0_s0(label):
    m = bopp_matrix(label, BoppParams(0, 0)).matrix
    assert m.entries == ((1, 0, 0, 0), (0, 1, F(1, 2), 0), (0, F(1, 3), 1, 0), (0, 0, 0, 1))


def test_bopp_matrix_row3(label):
    m = bopp_matrix(label, BoppParams(2, 1)).matrix
    assert m.entries[2] == (0, F(-1, 2), F(5, 4), 0)


def test_bopp_matrix_quotient_sector_is_identity(rng):
    lab = SectorLabel(1, 0, 0)
    for _ in range(20):
        p = BoppParams(rat(rng), rat(rng))
        assert bopp_matrix(lab, p).matrix == RealizationMatrix.identity(4)


def test_bopp_matrix_errors(label):
    with pytest.raises(InadmissibleParams):
        bopp_matrix(label, BoppParams(6, 0))
    with pytest.raises(ZeroHbar):
        bopp_matrix(SectorLabel(0, 1, 1), BoppParams(0, 0))
    with pytest.raises(DegenerateLabel):
        bopp_matrix(SectorLabel(1, 2, F(1, 2)), BoppParams(0, 0))


def test_matrix_entries_follow_display(rng):
    """Entry-by-entry comparison against the displayed S(r, s) evaluated in floats."""
    for _ in range(20):
        lab = regular_label(rng)
        p = admissible_params(rng, lab)
        h, t, b, r, s = (float(x) for x in (lab.hbar, lab.theta, lab.b_in, p.r, p.s))
        a = (1 - r) * h * b / (h - r * t * b)
        expected = np.array(
            [
                [1, 0, 0, -s * t / h],
                [0, 1, (1 - s) * t / h, 0],
                [0, a, 1 - a * s * t / h, 0],
                [-r * b, 0, 0, 1 - r * b * (1 - s) * t / h],
            ]
        )
        got = np.array(bopp_matrix(lab, p).matrix.entries, dtype=float)
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-12)


def test_sector_invariance_examples(label):
    assert verify_sector_invariance(bopp_matrix(label, BoppParams(0, 0)))
    assert verify_sector_invariance(bopp_matrix(label, BoppParams(2, 5)))
    fake = BoppRealization(label, BoppParams(0, 0), RealizationMatrix.identity(4))
    assert not verify_sector_invariance(fake)


def test_sector_invariance_random(rng):
    for _ in range(200):
        lab = regular_label(rng, generic=False)
        real = bopp_matrix(lab, admissible_params(rng, lab))
        assert verify_sector_invariance(real)
        assert real.matrix.det() == lab.kappa / lab.hbar


def test_transfer_examples(label):
    src = bopp_matrix(label, BoppParams(0, 0))
    assert realization_transfer(src, BoppParams(0, 0)) == RealizationMatrix.identity(4)
    g = realization_transfer(src, BoppParams(2, 1))
    om = omega_nc(label)
    assert push_commutators(g, om) == om
    assert g @ src.matrix == bopp_matrix(label, BoppParams(2, 1)).matrix
    with pytest.raises(InadmissibleParams):
        realization_transfer(src, BoppParams(6, 0))


def test_transfer_preserves_omega_random(rng):
    for _ in range(50):
        lab = regular_label(rng)
        src = bopp_matrix(lab, admissible_params(rng, lab))
        g = realization_transfer(src, admissible_params(rng, lab))
        assert push_commutators(g, omega_nc(lab)) == omega_nc(lab)
