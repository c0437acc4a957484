"""First eigenvalue of -y'' + (q - lam) y = 0 under Robin conditions.

The solver propagates the exact 2x2 fundamental solution across each
constant-potential cell, applies the derivative jump y'(z+) - y'(z-) =
w*y(z) at interior atoms, and bisects on the sign structure of the terminal
defect y'(1) + k1sq*y(1).  A trial value lies below the first eigenvalue
exactly when the shot solution is zero-free with positive defect, which makes
the bracket predicate monotone.  An independent finite-difference
discretization provides a cross-check oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solveh_banded

from ._kernels import (
    STATUS_NONFINITE,
    STATUS_OK,
    lambda1_kernel,
    propagate_step,
    shoot_kernel,
    sturm_count_below,
)
from .errors import GridTooCoarse, NoConvergence, NonFiniteState, ToleranceNotReached
from .potential import Potential, RobinBC, compile_arrays, fold_endpoint_atoms

DEFAULT_TOL = 1e-10
DEFAULT_GRID_POINTS = 2001


@dataclass(frozen=True)
class ShootState:
    """Instantaneous shooting state: position, value, derivative, zeros so far."""

    x: float
    y: float
    yp: float
    zero_count: int = 0


@dataclass(frozen=True)
class EigenResult:
    """Converged first eigenvalue with a sampled positive eigenfunction."""

    lambda1: float
    xs: np.ndarray
    ys: np.ndarray
    residual: float
    bracket_width: float


def propagate_interval(state: ShootState, length: float, qval: float, lam: float) -> ShootState:
    """Advance the state across a cell of constant potential qval.

    Uses the exact trigonometric / linear / hyperbolic fundamental solution of
    y'' = (qval - lam) y and counts the zeros crossed in the open interior.
    """
    if length < 0.0:
        raise ValueError("length must be >= 0")
    y1, yp1, nz, lns = propagate_step(state.y, state.yp, lam - qval, length)
    if lns != 0.0:
        f = math.exp(lns)
        y1, yp1 = y1 * f, yp1 * f
    return ShootState(state.x + length, y1, yp1, state.zero_count + nz)


def apply_delta(state: ShootState, weight: float) -> ShootState:
    """Derivative jump at a point mass: y stays, y' gains weight*y."""
    if not math.isfinite(state.y):
        raise NonFiniteState("state value is not finite")
    return ShootState(state.x, state.y, state.yp + weight * state.y, state.zero_count)


def shoot(q: Potential, bc: RobinBC, lam: float):
    """Terminal defect and interior zero count for a trial eigenvalue.

    Starts from y(0) = 1, y'(0) = k0sq (the left condition holds exactly) and
    returns (y'(1) + k1sq*y(1), zero_count).  Endpoint atoms must already be
    folded into the coefficients; the state is rescaled between cells, so the
    defect is meaningful up to a positive factor.
    """
    edges, vals, atomw = compile_arrays(q)
    res, zc, ok = shoot_kernel(edges, vals, atomw, bc.k0sq, bc.k1sq, lam)
    if not ok:
        raise NonFiniteState("shooting state overflowed or vanished")
    return res, zc


def _solve_arrays(edges, vals, atomw, k0sq, k1sq, tol):
    lam, width, res, zc, status = lambda1_kernel(edges, vals, atomw, k0sq, k1sq, tol)
    if status == STATUS_NONFINITE:
        raise NonFiniteState("shooting state overflowed or vanished")
    if status != STATUS_OK:
        raise ToleranceNotReached(f"bisection stalled at bracket width {width:.3e} > {tol:.3e}")
    return lam, width, res, zc


def _effective_arrays(q, bc):
    folded, eff = fold_endpoint_atoms(q, bc)
    edges, vals, atomw = compile_arrays(folded)
    return edges, vals, atomw, eff.k0sq, eff.k1sq


def lambda1_value(q: Potential, bc: RobinBC, tol: float = DEFAULT_TOL) -> float:
    """First eigenvalue only (no eigenfunction sampling)."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    edges, vals, atomw, k0, k1 = _effective_arrays(q, bc)
    return _solve_arrays(edges, vals, atomw, k0, k1, tol)[0]


def lambda1(
    q: Potential,
    bc: RobinBC,
    tol: float = DEFAULT_TOL,
    grid_points: int = DEFAULT_GRID_POINTS,
) -> EigenResult:
    """First eigenvalue with its positive eigenfunction sampled on a grid.

    The bracket [lo, hi] is grown geometrically around the unique lam where
    the zero-free-and-positive-defect predicate flips, then bisected to width
    tol.  The eigenfunction is re-shot at the converged value and sampled on
    ``grid_points`` uniform points plus every breakpoint, normalized to max 1.

    Raises ToleranceNotReached if 200 bisection steps cannot reach tol.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if grid_points < 1001:
        raise ValueError("grid_points must be >= 1001")
    edges, vals, atomw, k0, k1 = _effective_arrays(q, bc)
    lam, width, res, _ = _solve_arrays(edges, vals, atomw, k0, k1, tol)
    xs = np.union1d(np.linspace(0.0, 1.0, grid_points), edges)
    ys = _sample_eigenfunction(edges, vals, atomw, k0, lam, xs)
    return EigenResult(lam, xs, ys, res, width)


def _sample_eigenfunction(edges, vals, atomw, k0sq, lam, xs):
    """Evaluate the shot solution at the converged lam on the grid xs."""
    ncells = len(vals)
    ys_cell = np.empty(ncells)
    yp_cell = np.empty(ncells)
    ln_cell = np.empty(ncells)
    y, yp, ln = 1.0, k0sq, 0.0
    for i in range(ncells):
        if i > 0 and atomw[i] != 0.0:
            yp += atomw[i] * y
        ys_cell[i], yp_cell[i], ln_cell[i] = y, yp, ln
        y, yp, nz, lns = propagate_step(y, yp, lam - vals[i], edges[i + 1] - edges[i])
        ln += lns
        sc = max(abs(y), abs(yp))
        if not (sc > 0.0 and math.isfinite(sc)):
            raise NonFiniteState("eigenfunction sampling overflowed")
        y, yp = y / sc, yp / sc
        ln += math.log(sc)

    cells = np.clip(np.searchsorted(edges, xs, side="right") - 1, 0, ncells - 1)
    raw = np.empty(len(xs))
    for j, x in enumerate(xs):
        i = cells[j]
        t = x - edges[i]
        w = lam - vals[i]
        if w > 0.0:
            s = math.sqrt(w)
            raw[j] = ys_cell[i] * math.cos(s * t) + yp_cell[i] * math.sin(s * t) / s
        elif w == 0.0:
            raw[j] = ys_cell[i] + yp_cell[i] * t
        else:
            s = math.sqrt(-w)
            if s * t > 690.0:
                raise NonFiniteState("eigenfunction sampling overflowed")
            raw[j] = ys_cell[i] * math.cosh(s * t) + yp_cell[i] * math.sinh(s * t) / s
    raw *= np.exp(ln_cell[cells] - ln_cell.max())
    top = raw.max()
    if not (top > 0.0 and np.isfinite(top)):
        raise NonFiniteState("eigenfunction sampling overflowed")
    raw /= top
    if raw.min() <= 0.0:
        raise NonFiniteState("sampled eigenfunction is not strictly positive")
    return raw


def quadratic_form(q: Potential, bc: RobinBC, lam: float, xs, ys) -> float:
    """Energy form at the sampled function: int (y')^2 + (q - lam) y^2 plus boundary terms.

    xs must contain every segment edge and atom position.  y' is estimated by
    central differences, falling back to one-sided differences at breakpoints
    (where y' may jump) and at the interval ends; the integral is a composite
    trapezoid over the grid cells.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 11:
        raise GridTooCoarse("quadratic_form needs at least 11 grid points")
    kinks = q.breakpoints()
    idx = np.searchsorted(xs, kinks)
    idx = np.clip(idx, 0, len(xs) - 1)
    near = np.minimum(np.abs(xs[idx] - kinks), np.abs(xs[np.maximum(idx - 1, 0)] - kinks))
    if np.any(near > 1e-9):
        raise ValueError("grid must contain every breakpoint and atom position")
    use_central = np.ones(len(xs), dtype=bool)
    for z in kinks:
        use_central[int(np.argmin(np.abs(xs - z)))] = False
    use_central[0] = use_central[-1] = False

    dx = np.diff(xs)
    cell_slope = np.diff(ys) / dx
    central = np.zeros(len(xs))
    central[1:-1] = (ys[2:] - ys[:-2]) / (xs[2:] - xs[:-2])
    # slope as seen from inside each cell at its two ends: central difference
    # where y' is smooth, one-sided into the cell at kinks and interval ends
    left_sl = np.where(use_central[:-1], central[:-1], cell_slope)
    right_sl = np.where(use_central[1:], central[1:], cell_slope)

    grad_term = float(np.sum(0.5 * dx * (left_sl**2 + right_sl**2)))
    mids = 0.5 * (xs[1:] + xs[:-1])
    vmid = q.value_at(mids)
    pot_term = float(np.sum(0.5 * dx * (vmid - lam) * (ys[1:] ** 2 + ys[:-1] ** 2)))
    atom_term = 0.0
    for a in q.atoms:
        j = int(np.argmin(np.abs(xs - a.position)))
        atom_term += a.weight * ys[j] ** 2
    return grad_term + pot_term + atom_term + bc.k0sq * ys[0] ** 2 + bc.k1sq * ys[-1] ** 2


def fd_lambda1(q: Potential, bc: RobinBC, n: int) -> float:
    """Independent finite-difference oracle for the first eigenvalue.

    Assembles the (n+1)-node second-difference matrix with the Robin
    conditions eliminated through ghost points, samples segments at cell
    midpoints, spreads each interior atom as a weight/h column at the nearest
    node, and runs shifted inverse iteration.  The shift is placed just below
    a Sturm-sequence bracket of the smallest eigenvalue, and the iteration
    stops when successive Rayleigh quotients differ by less than 1e-12.

    Raises NoConvergence after 10^4 iterations.
    """
    if n < 100:
        raise ValueError("n must be >= 100")
    folded, eff = fold_endpoint_atoms(q, bc)
    h = 1.0 / n
    mids = (np.arange(n) + 0.5) * h
    mv = folded.value_at(mids)
    qd = np.empty(n + 1)
    qd[0] = mv[0]
    qd[n] = mv[-1]
    qd[1:n] = 0.5 * (mv[:-1] + mv[1:])
    for a in folded.atoms:
        j = int(round(a.position * n))
        col = a.weight / h
        if j == 0 or j == n:
            col *= 2.0  # ghost elimination doubles the boundary rows
        qd[j] += col

    diag = 2.0 / h**2 + qd
    diag[0] += 2.0 * eff.k0sq / h
    diag[n] += 2.0 * eff.k1sq / h
    off = np.full(n, -1.0 / h**2)
    off[0] = off[-1] = -math.sqrt(2.0) / h**2  # symmetrized boundary couplings

    pad = np.abs(np.concatenate(([0.0], off))) + np.abs(np.concatenate((off, [0.0])))
    lo = float(np.min(diag - pad))
    hi = float(np.max(diag + pad))
    for _ in range(80):
        if hi - lo <= max(1e-6, 1e-9 * abs(lo)):
            break
        mid = 0.5 * (lo + hi)
        if sturm_count_below(diag, off, mid) == 0:
            lo = mid
        else:
            hi = mid
    sigma = lo - max(1e-6, 1e-9 * abs(lo))

    ab = np.zeros((2, n + 1))
    ab[0, 1:] = off
    ab[1, :] = diag - sigma
    v = np.full(n + 1, 1.0 / math.sqrt(n + 1))
    rho_prev = math.inf
    delta_prev = math.inf
    for it in range(10_000):
        w = solveh_banded(ab, v, lower=False)
        w /= np.linalg.norm(w)
        aw = diag * w
        aw[:-1] += off * w[1:]
        aw[1:] += off * w[:-1]
        rho = float(w @ aw)
        delta = abs(rho - rho_prev)
        if delta < 1e-12:
            return rho
        if it >= 3 and delta >= delta_prev:
            # Rayleigh increments stopped shrinking: the quotient has hit its
            # eps*||A|| rounding floor (~1e-9 at n=2000), which is far inside
            # the oracle's own O(h) discretization error
            return rho
        rho_prev = rho
        delta_prev = delta
        v = w
    raise NoConvergence("inverse iteration did not converge in 10^4 steps")
