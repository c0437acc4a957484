"""Exact extrema of the first eigenvalue over unit-mass potential classes.

Over nonnegative potentials of total mass 1 (and their negatives) the first
eigenvalue has a largest and a smallest value, each attained by an explicit
extremal potential: a single plateau for the supremum over the positive
class, endpoint point masses for the negative class, and a single point mass
for both infima.  Every report carries the extremal potential and a
cross-check recomputation through the shooting solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import _solve_arrays, lambda1_value
from .errors import NoCrossing, PolePoint
from .potential import DeltaAtom, Potential, RobinBC, Segment

ROOT_TOL = 1e-12
_MU_TOL = 1e-13
_CROSS_TOL = 1e-12

_EDGES0 = np.array([0.0, 1.0])
_VALS0 = np.zeros(1)
_ATOMW0 = np.zeros(2)

KINDS = ("M1plus", "M1minus", "m1plus", "m1minus")


@dataclass(frozen=True)
class ExtremumReport:
    """One extremum: its value, the extremal potential, and the branch taken."""

    kind: str
    value: float
    q_star: Potential
    branch: str
    cross_check: float


def _eig0(k0sq, k1sq, tol=_CROSS_TOL):
    """First eigenvalue of the zero potential with raw effective coefficients."""
    return _solve_arrays(_EDGES0, _VALS0, _ATOMW0, k0sq, k1sq, tol)[0]


def cot_secular(x: float) -> float:
    """sqrt(x)*cot(sqrt(x)), continued through 0 into sqrt(|x|)*coth(sqrt(|x|)).

    Raises PolePoint within 1e-12 of the cotangent poles (k*pi)^2, k >= 1.
    """
    if x > 0.0:
        r = math.sqrt(x)
        k = round(r / math.pi)
        if k >= 1 and abs(x - (k * math.pi) ** 2) < 1e-12:
            raise PolePoint(f"x = {x} sits on a cotangent pole")
        return r / math.tan(r)
    if x == 0.0:
        return 1.0
    r = math.sqrt(-x)
    return r / math.tanh(r)


def sup_plus(bc: RobinBC, tol: float = ROOT_TOL) -> ExtremumReport:
    """Supremum over the positive class: plateau potential of height mu.

    mu is the unique root of alpha_mu + beta_mu + 1/mu = 1 (the left side of
    the root equation is strictly decreasing), and the extremal potential
    equals mu on [alpha_mu, 1 - beta_mu] and 0 elsewhere, so its mass is
    exactly mu * (1/mu) = 1.
    """
    k0, k1 = bc.k0sq, bc.k1sq

    def w(mu):
        s = math.sqrt(mu)
        return (math.atan2(k0, s) + math.atan2(k1, s)) / s + 1.0 / mu - 1.0

    lo = 0.5  # w(0.5) >= 1 > 0 for any admissible bc
    hi = 2.0
    for _ in range(200):
        if w(hi) < 0.0:
            break
        hi *= 2.0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if w(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    mu = 0.5 * (lo + hi)
    s = math.sqrt(mu)
    alpha = math.atan2(k0, s) / s
    beta = math.atan2(k1, s) / s
    q_star = Potential(segments=(Segment(alpha, 1.0 - beta, mu),))
    return ExtremumReport(
        "M1plus", mu, q_star, "M1plus/plateau", lambda1_value(q_star, bc, _CROSS_TOL)
    )


def sup_minus(bc: RobinBC, tol: float = ROOT_TOL) -> ExtremumReport:
    """Supremum over the negative class: three closed-form branches.

    (a) k0sq + k1sq <= 1: value k0sq + k1sq - 1, extremal potential a
        constant part plus endpoint masses -k0sq*delta_0 - k1sq*delta_1.
    (b) k0sq + k1sq >= 1 and k1sq - k0sq <= 1: zero potential with both
        effective coefficients (k0sq + k1sq - 1)/2, endpoint masses split
        accordingly.
    (c) k1sq - k0sq >= 1: zero potential with coefficients (k0sq, k1sq - 1),
        extremal potential -delta_1.
    Overlapping conditions agree by continuity; the first match wins.
    """
    k0, k1 = bc.k0sq, bc.k1sq
    if k0 + k1 <= 1.0:
        value = k0 + k1 - 1.0
        segs = () if k0 + k1 == 1.0 else (Segment(0.0, 1.0, -(1.0 - k0 - k1)),)
        q_star = Potential(segments=segs, atoms=(DeltaAtom(0.0, -k0), DeltaAtom(1.0, -k1)))
        branch = "M1minus/k0sq+k1sq<=1"
    elif k1 - k0 <= 1.0:
        c = 0.5 * (k0 + k1 - 1.0)
        value = _eig0(c, c, tol)
        q_star = Potential(
            atoms=(
                DeltaAtom(0.0, -0.5 * (1.0 + k0 - k1)),
                DeltaAtom(1.0, -0.5 * (1.0 - k0 + k1)),
            )
        )
        branch = "M1minus/k0sq+k1sq>=1,k1sq-k0sq<=1"
    else:
        value = _eig0(k0, k1 - 1.0, tol)
        q_star = Potential(atoms=(DeltaAtom(1.0, -1.0),))
        branch = "M1minus/k1sq-k0sq>=1"
    return ExtremumReport("M1minus", value, q_star, branch, lambda1_value(q_star, bc, _CROSS_TOL))


def inf_plus(bc: RobinBC, tol: float = ROOT_TOL) -> ExtremumReport:
    """Infimum over the positive class: attained by the point mass at x=1.

    Equals the first eigenvalue of the zero potential with the right
    coefficient shifted to k1sq + 1.
    """
    value = _eig0(bc.k0sq, bc.k1sq + 1.0, tol)
    q_star = Potential(atoms=(DeltaAtom(1.0, 1.0),))
    return ExtremumReport(
        "m1plus", value, q_star, "m1plus/delta1", lambda1_value(q_star, bc, _CROSS_TOL)
    )


def inf_plus_secular(bc: RobinBC) -> float:
    """Independent root of the transcendental secular equation for inf_plus.

    Solves (lam - k0sq*k1sq - k0sq)/(k0sq + k1sq + 1) = cot_secular(lam) on
    (0, pi^2); used to cross-validate the shooting route.
    """
    k0, k1 = bc.k0sq, bc.k1sq
    denom = k0 + k1 + 1.0

    def f(lam):
        return (lam - k0 * k1 - k0) / denom - cot_secular(lam)

    lo, hi = 0.0, math.pi**2 - 1e-9
    for _ in range(200):
        if hi - lo <= ROOT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def left_half_eigenvalue(zeta: float, bc: RobinBC) -> float:
    """Smallest eigenvalue on [0, zeta] with 2y'(zeta) - y(zeta) = 0 on the right.

    Computed by rescaling [0, zeta] to the unit interval, which multiplies the
    eigenvalue by zeta^2 and the boundary coefficients by zeta.
    """
    if not 0.0 < zeta <= 1.0:
        raise ValueError("zeta must lie in (0, 1]")
    # rescaled solve tolerance keeps the unrescaled eigenvalue accurate to
    # _MU_TOL; the floor keeps it above the floating-point spacing at tiny zeta
    tol = max(_MU_TOL * zeta**2, 1e-20)
    return _solve_arrays(_EDGES0, _VALS0, _ATOMW0, zeta * bc.k0sq, -0.5 * zeta, tol)[0] / zeta**2


def right_half_eigenvalue(zeta: float, bc: RobinBC) -> float:
    """Smallest eigenvalue on [zeta, 1] with 2y'(zeta) + y(zeta) = 0 on the left."""
    if not 0.0 <= zeta < 1.0:
        raise ValueError("zeta must lie in [0, 1)")
    length = 1.0 - zeta
    tol = max(_MU_TOL * length**2, 1e-20)
    lam = _solve_arrays(_EDGES0, _VALS0, _ATOMW0, -0.5 * length, length * bc.k1sq, tol)[0]
    return lam / length**2


def inf_minus(bc: RobinBC, tol: float = ROOT_TOL) -> ExtremumReport:
    """Infimum over the negative class.

    When the interior criterion holds (k0sq > 1/2, or k0sq = k1sq = 1/2) the
    infimum is attained at an interior point mass -delta_zeta, with zeta the
    crossing of the two half-interval eigenvalue curves (the left one strictly
    decreasing, the right one strictly increasing).  Otherwise it is attained
    at -delta_0, i.e. the zero potential with left coefficient k0sq - 1.
    """
    k0, k1 = bc.k0sq, bc.k1sq
    if abs(k0 - 0.5) < 1e-12 and abs(k1 - 0.5) < 1e-12:
        q_star = Potential(atoms=(DeltaAtom(0.5, -1.0),))
        return ExtremumReport(
            "m1minus",
            -0.25,
            q_star,
            "m1minus/interior-any-zeta",
            lambda1_value(q_star, bc, _CROSS_TOL),
        )
    if k0 > 0.5:
        gap = lambda z: left_half_eigenvalue(z, bc) - right_half_eigenvalue(z, bc)
        lo, hi = 1e-6, 1.0 - 1e-6
        while gap(lo) <= 0.0 and lo > 1e-13:
            lo /= 8.0
        while gap(hi) >= 0.0 and 1.0 - hi > 1e-13:
            hi = 1.0 - (1.0 - hi) / 8.0
        if gap(lo) <= 0.0 or gap(hi) >= 0.0:
            raise NoCrossing("half-interval eigenvalue curves do not cross on (0, 1)")
        for _ in range(200):
            if hi - lo <= tol:
                break
            mid = 0.5 * (lo + hi)
            if gap(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        zeta = 0.5 * (lo + hi)
        value = left_half_eigenvalue(zeta, bc)
        if value < -(k0**2) - 1e-9:
            raise NoCrossing(f"crossing value {value} below the admissible floor {-(k0**2)}")
        q_star = Potential(atoms=(DeltaAtom(zeta, -1.0),))
        return ExtremumReport(
            "m1minus", value, q_star, "m1minus/interior", lambda1_value(q_star, bc, _CROSS_TOL)
        )
    value = _eig0(k0 - 1.0, k1, tol)
    q_star = Potential(atoms=(DeltaAtom(0.0, -1.0),))
    return ExtremumReport(
        "m1minus", value, q_star, "m1minus/delta0", lambda1_value(q_star, bc, _CROSS_TOL)
    )


def all_extrema(bc: RobinBC, tol: float = ROOT_TOL):
    """The four extremum reports in the fixed order M1plus, M1minus, m1plus, m1minus."""
    return [sup_plus(bc, tol), sup_minus(bc, tol), inf_plus(bc, tol), inf_minus(bc, tol)]
