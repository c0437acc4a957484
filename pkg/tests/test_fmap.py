import math

import numpy as np
import pytest

from robinsl import (
    BranchUndefined,
    DeltaAtom,
    Potential,
    RobinBC,
    decay_logslope,
    decay_profile,
    delta_strength,
    delta_strength_dzeta,
    lambda1_value,
    phase_offsets,
)

BC00 = RobinBC(0.0, 0.0)
BC11 = RobinBC(1.0, 1.0)
BCHH = RobinBC(0.5, 0.5)

MU_GRID = (-2.0, -0.5, -0.1, 0.0, 0.3, 1.0, 3.0)
ZETA_GRID = tuple(np.linspace(0.0, 1.0, 11))
BC_GRID = (BC00, RobinBC(0.25, 0.5), BC11, RobinBC(0.0, 2.0))


def test_phase_offsets_zero_coefficients():
    off = phase_offsets(1.0, BC00)
    assert off.alpha == 0.0 and off.beta == 0.0 and off.regime == "positive"


def test_phase_offsets_arctan():
    off = phase_offsets(1.0, BC11)
    assert off.alpha == pytest.approx(math.pi / 4, abs=1e-15)
    assert off.beta == pytest.approx(math.pi / 4, abs=1e-15)


def test_phase_offsets_logarithmic():
    off = phase_offsets(-1.0 / 16.0, BCHH)
    # 0.5*log((0.5+0.25)/(0.5-0.25)) = 0.5*log(3)
    assert off.alpha == pytest.approx(0.5 * math.log(3.0), rel=1e-14)
    assert off.beta == pytest.approx(0.5 * math.log(3.0), rel=1e-14)
    assert off.regime == "negative"


def test_phase_offsets_branch_undefined():
    with pytest.raises(BranchUndefined):
        phase_offsets(-0.25, BCHH)  # sqrt(|mu|) = 0.5 = k0sq


def test_decay_logslope_middle_branch():
    for x in (0.0, 0.3, 1.0):
        assert decay_logslope(2.0, 2.0, x) == 1.0


def test_decay_profile_middle_branch():
    assert decay_profile(1.0, 1.0, 0.5) == pytest.approx(math.exp(0.5), rel=1e-15)


def test_decay_logslope_at_origin():
    # tanh(log(sqrt(3))) = (3-1)/(3+1)
    assert decay_logslope(2.0, 1.0, 0.0) == pytest.approx(0.5, rel=1e-14)
    # the coth branch gives kappa/nu at x=0
    assert decay_logslope(1.0, 2.0, 0.0) == pytest.approx(2.0, rel=1e-14)


def test_strength_zero_mu_neumann():
    for z in ZETA_GRID:
        assert delta_strength(0.0, z, BC00).value == 0.0


def test_strength_negative_constant_branch():
    # at mu = -k0^4 = -k1^4 both kernels sit on the middle branch
    for z in ZETA_GRID:
        pt = delta_strength(-0.25, z, BCHH)
        assert pt.in_domain
        assert pt.value == pytest.approx(-1.0, abs=1e-12)


def test_strength_inverts_infimum_point():
    lam = lambda1_value(Potential(atoms=(DeltaAtom(1.0, 1.0),)), BC00, 1e-12)
    pt = delta_strength(lam, 1.0, BC00)
    assert pt.in_domain
    assert pt.value == pytest.approx(1.0, abs=1e-6)


def test_strength_domain_flag_positive_mu():
    # mu=3 under Neumann: the tangent phase leaves the open half-period near
    # the endpoints, so zeta=0 and 1 are outside the domain
    assert not delta_strength(3.0, 0.0, BC00).in_domain
    assert not delta_strength(3.0, 1.0, BC00).in_domain
    assert delta_strength(3.0, 0.5, BC00).in_domain


def test_defining_identity_on_grid():
    for bc in (BC11,):
        for mu in MU_GRID:
            for z in ZETA_GRID:
                pt = delta_strength(mu, float(z), bc)
                if not pt.in_domain:
                    continue
                q = Potential(atoms=(DeltaAtom(float(z), pt.value),))
                lam = lambda1_value(q, bc, 1e-12)
                assert abs(lam - mu) <= 1e-8


def test_strength_monotone_in_mu():
    for bc in BC_GRID:
        for z in (0.0, 0.3, 0.7, 1.0):
            vals = [
                delta_strength(mu, z, bc).value
                for mu in MU_GRID
                if delta_strength(mu, z, bc).in_domain
            ]
            assert all(a < b for a, b in zip(vals, vals[1:]))


def test_regime_matching_at_zero():
    for bc in BC_GRID:
        for z in (0.0, 0.25, 0.5, 1.0):
            f0 = delta_strength(0.0, z, bc).value
            up = delta_strength(1e-8, z, bc).value
            dn = delta_strength(-1e-8, z, bc).value
            assert abs(up - f0) <= 1e-6
            assert abs(dn - f0) <= 1e-6


def test_continuity_across_regimes():
    # smoke test: no jumps along mu through 0 beyond the local slope scale
    bc = RobinBC(0.25, 0.5)
    for z in (0.0, 0.4, 1.0):
        mus = np.linspace(-0.1, 0.1, 201)
        vals = [delta_strength(float(m), z, bc).value for m in mus]
        steps = np.abs(np.diff(vals))
        assert steps.max() <= 50.0 * (mus[1] - mus[0])


def test_dzeta_symmetric_midpoint():
    for mu in (-0.5, 0.0, 0.5, 2.0):
        assert delta_strength_dzeta(mu, 0.5, BC11) == pytest.approx(0.0, abs=1e-10)


def test_dzeta_zero_mu_analytic():
    bc10 = RobinBC(1.0, 0.0, validate=False)  # effective pair for the formula check
    # d/dzeta of -1/(1+zeta) is 1/(1+zeta)^2
    for z in (0.1, 0.5, 0.9):
        assert delta_strength_dzeta(0.0, z, bc10) == pytest.approx(
            1.0 / (1.0 + z) ** 2, rel=1e-12
        )


def test_dzeta_matches_central_differences():
    h = 1e-5
    for bc in (RobinBC(0.25, 0.5), BC11):
        for mu in np.linspace(-2.0, 2.5, 20):
            for z in np.linspace(h, 1.0 - h, 20):
                pt = delta_strength(float(mu), float(z), bc)
                if not pt.in_domain:
                    continue
                up = delta_strength(float(mu), float(z + h), bc)
                dn = delta_strength(float(mu), float(z - h), bc)
                if not (up.in_domain and dn.in_domain):
                    continue
                fd = (up.value - dn.value) / (2.0 * h)
                assert delta_strength_dzeta(float(mu), float(z), bc) == pytest.approx(
                    fd, abs=1e-6, rel=1e-6
                )


def test_dzeta_strictly_negative_between_coefficient_scales():
    # for mu strictly between -k1^4 and -k0^4 the strength decreases in zeta
    bc = RobinBC(0.5, 1.0)
    mu = -0.5  # between -(1.0)^2 and -(0.5)^2
    for z in np.linspace(0.05, 0.95, 10):
        assert delta_strength_dzeta(mu, float(z), bc) < 0.0


def test_dzeta_out_of_domain_raises():
    with pytest.raises(ValueError):
        delta_strength_dzeta(3.0, 0.0, BC00)
