import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussmix import (
    PhysicalityError,
    SingleModeCM,
    SqueezedThermalParams,
    check_physical,
    fidelity,
    make_cm,
    purity,
    squeezed,
)
from oracles import fock_cm, fock_state, uhlmann_fidelity
from strategies import angles, params, photons, physical_cms, squeezing
from conftest import random_cm


class TestMakeCM:
    def test_vacuum(self):
        cm = make_cm(SqueezedThermalParams(0.0, 0.0, 0.0))
        assert (cm.xx, cm.xp, cm.pp) == (0.5, 0.0, 0.5)

    def test_orthogonal_ordering_at_half_pi(self):
        cm = make_cm(SqueezedThermalParams(0.92, math.pi / 2, 0.0))
        assert cm.xx == pytest.approx(math.exp(-1.84) / 2, rel=1e-14)
        assert cm.pp == pytest.approx(math.exp(1.84) / 2, rel=1e-14)
        assert cm.xx == pytest.approx(0.0794, abs=1e-4)
        assert cm.pp == pytest.approx(3.148, abs=1e-3)
        assert abs(cm.xp) < 1e-15

    def test_thermal_squeezed(self):
        cm = make_cm(SqueezedThermalParams(0.5, 0.0, 0.5))
        assert cm.xx == pytest.approx(math.e, rel=1e-14)
        assert cm.pp == pytest.approx(1 / math.e, rel=1e-14)
        assert cm.xp == 0.0

    @pytest.mark.parametrize("kw", [dict(r=-0.1), dict(n_state=-1e-3), dict(theta=math.pi), dict(theta=-0.1)])
    def test_rejects_bad_params(self, kw):
        with pytest.raises(ValueError):
            SqueezedThermalParams(**kw)

    @given(params)
    def test_purity_and_det(self, p):
        cm = make_cm(p)
        mu = 1 / (1 + 2 * p.n_state)
        assert check_physical(cm)
        assert cm.det == pytest.approx(1 / (4 * mu * mu), rel=1e-12)
        assert purity(cm) == pytest.approx(mu, abs=1e-12)

    @given(squeezing, photons, angles, angles)
    def test_rotation_covariance(self, r, n, t1, t2):
        a, b = squeezed(r, t1, n), squeezed(r, t2, n)
        assert a.det == pytest.approx(b.det, rel=1e-12)
        assert purity(a) == pytest.approx(purity(b), abs=1e-12)
        assert a.trace == pytest.approx(b.trace, rel=1e-12)


class TestPurity:
    def test_vacuum(self):
        assert purity(SingleModeCM.vacuum()) == 1.0

    def test_thermal(self):
        assert purity(SingleModeCM.thermal(0.5)) == pytest.approx(0.5, abs=1e-15)

    @given(squeezing)
    def test_pure_squeezed(self, r):
        assert purity(squeezed(r)) == pytest.approx(1.0, abs=1e-12)

    def test_nonphysical_raises(self):
        with pytest.raises(PhysicalityError):
            purity(SingleModeCM(0.4, 0.0, 0.4))


class TestCheckPhysical:
    def test_vacuum(self):
        assert check_physical(SingleModeCM.vacuum(), 1e-12)

    def test_below_bound(self):
        assert not check_physical(SingleModeCM(0.4, 0.0, 0.4), 1e-12)

    def test_negative_diagonal(self):
        assert not check_physical(SingleModeCM(-1.0, 0.0, -1.0))


class TestFidelity:
    def test_vacuum_vs_thermal(self):
        # Delta = det(2 I) = 4, delta = 0
        assert fidelity(SingleModeCM.vacuum(), SingleModeCM.thermal(1.0)) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("r", [0.1, 0.5, 0.92, 1.5, 2.0])
    def test_orthogonal_pure_pair(self, r):
        f = fidelity(squeezed(r, 0.0), squeezed(r, math.pi / 2))
        assert f == pytest.approx(1 / math.cosh(2 * r), abs=1e-10)

    def test_r092_value(self):
        assert fidelity(squeezed(0.92, 0.0), squeezed(0.92, math.pi / 2)) == pytest.approx(0.3098, abs=1e-4)

    @given(physical_cms, physical_cms)
    def test_symmetric(self, a, b):
        assert fidelity(a, b) == fidelity(b, a)

    @given(physical_cms, physical_cms)
    def test_bounded(self, a, b):
        assert 0 < fidelity(a, b) <= 1

    def test_self_fidelity_many(self, rng):
        worst = max(abs(fidelity(cm, cm) - 1) for cm in (random_cm(rng) for _ in range(10_000)))
        assert worst < 1e-12

    @settings(max_examples=200)
    @given(squeezing, angles)
    def test_pure_pair_closed_form_any_axis(self, r, theta):
        phi = (theta + math.pi / 2) % math.pi
        f = fidelity(squeezed(r, theta), squeezed(r, phi))
        assert f == pytest.approx(1 / math.cosh(2 * r), abs=1e-10)

    def test_distinct_states_below_one(self):
        assert fidelity(squeezed(0.3), squeezed(0.3, 0.2)) < 1

    @pytest.mark.parametrize(
        "c, d",
        [
            ((0.0, 0.0, 0.0), (0.0, 0.0, 1.0)),
            ((0.3, 0.4, 0.2), (0.5, 2.0, 0.7)),
            ((0.5, 0.0, 0.5), (0.5, math.pi / 2, 0.0)),
            ((0.2, 1.0, 0.8), (0.6, 2.5, 0.3)),
            ((0.4, 0.3, 0.6), (0.4, 0.3, 0.1)),
        ],
    )
    def test_matches_fock_uhlmann(self, c, d):
        rho_c, rho_d = fock_state(*c), fock_state(*d)
        expected = uhlmann_fidelity(rho_c, rho_d)
        got = fidelity(SingleModeCM(*fock_cm(rho_c)), SingleModeCM(*fock_cm(rho_d)))
        assert got == pytest.approx(expected, abs=1e-7)

    def test_rejects_nonphysical(self):
        with pytest.raises(PhysicalityError):
            fidelity(SingleModeCM(0.4, 0.0, 0.4), SingleModeCM.vacuum())

    def test_tiny_negative_delta_clamped(self):
        # det slightly below 1/4 from rounding must not error
        a = SingleModeCM(0.5, 0.0, 0.5 - 1e-14)
        assert fidelity(a, a) == pytest.approx(1.0, abs=1e-12)


def test_from_matrix_roundtrip():
    cm = squeezed(0.7, 0.3, 0.2)
    assert SingleModeCM.from_matrix(cm.matrix) == cm
    with pytest.raises(ValueError):
        SingleModeCM.from_matrix(np.array([[1.0, 0.2], [0.1, 1.0]]))
