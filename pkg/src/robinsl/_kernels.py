"""Scalar shooting kernels.

Everything here is written in plain ``math``-level Python so that numba can
compile it unchanged.  When numba is importable and the environment variable
``ROBINSL_NO_JIT`` is unset, every kernel is wrapped in ``@njit(cache=True)``;
otherwise the same functions run as ordinary Python (the pure fallback path).
The two paths execute identical code and must agree to roundoff.
"""

import math
import os
import warnings

_PI = math.pi

# Status codes returned by lambda1_kernel.
STATUS_OK = 0
STATUS_TOL = 1
STATUS_NONFINITE = 2


def _no_jit_requested():
    return os.environ.get("ROBINSL_NO_JIT", "").strip().lower() in ("1", "true", "yes")


if _no_jit_requested():
    JIT_ENABLED = False

    def jit(func):
        return func

else:
    try:
        from numba import njit as _njit

        JIT_ENABLED = True

        def jit(func):
            return _njit(cache=True)(func)

    except ImportError:  # pragma: no cover - exercised only without numba
        JIT_ENABLED = False

        def jit(func):
            return func

        warnings.warn("numba not available, robinsl kernels run uncompiled", RuntimeWarning)


@jit
def propagate_step(y, yp, w, h):
    """Advance (y, y') across a cell of width h on which y'' = -w*y.

    Returns (y1, yp1, nzeros, lnscale) where nzeros counts the zeros of y in
    the open cell interior and the true end state is (y1, yp1) * exp(lnscale).
    lnscale is nonzero only on the overflow-guarded hyperbolic branch.
    """
    if w > 0.0:
        s = math.sqrt(w)
        sh = s * h
        c = math.cos(sh)
        sn = math.sin(sh)
        y1 = y * c + yp * sn / s
        yp1 = -y * s * sn + yp * c
        # zeros of R*cos(s*t - phi) for t in (0, h)
        phi = math.atan2(yp / s, y)
        a = (-phi - 0.5 * _PI) / _PI
        b = (sh - phi - 0.5 * _PI) / _PI
        k_lo = int(math.floor(a)) + 1
        k_hi = int(math.ceil(b)) - 1
        nz = k_hi - k_lo + 1
        if nz < 0:
            nz = 0
        return y1, yp1, nz, 0.0
    if w == 0.0:
        nz = 0
        if yp != 0.0:
            t = -y / yp
            if 0.0 < t < h:
                nz = 1
        return y + yp * h, yp, nz, 0.0
    s = math.sqrt(-w)
    sh = s * h
    nz = 0
    if yp != 0.0:
        r = -s * y / yp
        if 0.0 < r < 1.0:
            if math.atanh(r) < sh:
                nz = 1
    if sh <= 350.0:
        c = math.cosh(sh)
        sn = math.sinh(sh)
        return y * c + yp * sn / s, y * s * sn + yp * c, nz, 0.0
    # factor out exp(sh) so extreme cells cannot overflow
    e = math.exp(-2.0 * sh)
    c = 0.5 * (1.0 + e)
    sn = 0.5 * (1.0 - e)
    return y * c + yp * sn / s, y * s * sn + yp * c, nz, sh


@jit
def shoot_kernel(edges, vals, atomw, k0sq, k1sq, lam):
    """Shoot from the left boundary condition to x=1.

    edges[0] = 0 and edges[-1] = 1 partition the interval; vals[i] is the
    constant potential on cell i and atomw[i] the delta weight sitting at
    edges[i] (endpoint weights must be folded into the coefficients first).
    The state is max-norm rescaled after every cell, so only the sign of the
    returned residual y'(1) + k1sq*y(1) is meaningful at large |lam|.

    Returns (residual, zero_count, ok).
    """
    y = 1.0
    yp = k0sq
    nz = 0
    ncells = len(vals)
    for i in range(ncells):
        if i > 0 and atomw[i] != 0.0:
            yp = yp + atomw[i] * y
        h = edges[i + 1] - edges[i]
        if h > 0.0:
            y, yp, dz, _ = propagate_step(y, yp, lam - vals[i], h)
            nz += dz
        sc = abs(y)
        if abs(yp) > sc:
            sc = abs(yp)
        if not (sc > 0.0 and math.isfinite(sc)):
            return 0.0, -1, False
        y = y / sc
        yp = yp / sc
    return yp + k1sq * y, nz, True


@jit
def lambda1_kernel(edges, vals, atomw, k0sq, k1sq, tol):
    """Locate the smallest eigenvalue by bracketing plus bisection.

    A trial lam lies below the first eigenvalue exactly when the shot solution
    has no interior zero and positive residual; the bracket is grown
    geometrically on both sides of that predicate and then bisected to width
    tol (at most 200 halvings).

    Returns (lam, bracket_width, residual, zero_count, status).
    """
    total = 0.0
    for i in range(len(vals)):
        total += vals[i] * (edges[i + 1] - edges[i])
    for i in range(len(atomw)):
        total += atomw[i]

    lo = -abs(total)
    if lo > 0.0:
        lo = 0.0
    found = False
    for _ in range(200):
        r, zc, ok = shoot_kernel(edges, vals, atomw, k0sq, k1sq, lo)
        if not ok:
            return 0.0, 0.0, 0.0, 0, STATUS_NONFINITE
        if zc == 0 and r > 0.0:
            found = True
            break
        lo = 2.0 * lo - 1.0
    if not found:
        return 0.0, 0.0, 0.0, 0, STATUS_TOL

    hi = lo + 1.0
    found = False
    for _ in range(200):
        r, zc, ok = shoot_kernel(edges, vals, atomw, k0sq, k1sq, hi)
        if not ok:
            return 0.0, 0.0, 0.0, 0, STATUS_NONFINITE
        if zc >= 1 or r < 0.0:
            found = True
            break
        hi = lo + 2.0 * (hi - lo)
    if not found:
        return 0.0, 0.0, 0.0, 0, STATUS_TOL

    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        r, zc, ok = shoot_kernel(edges, vals, atomw, k0sq, k1sq, mid)
        if not ok:
            return 0.0, 0.0, 0.0, 0, STATUS_NONFINITE
        if zc == 0 and r > 0.0:
            lo = mid
        else:
            hi = mid

    width = hi - lo
    lam = 0.5 * (lo + hi)
    r, zc, ok = shoot_kernel(edges, vals, atomw, k0sq, k1sq, lam)
    if not ok:
        return 0.0, 0.0, 0.0, 0, STATUS_NONFINITE
    status = STATUS_OK if width <= tol else STATUS_TOL
    return lam, width, r, zc, status


@jit
def sturm_count_below(diag, off, sigma):
    """Number of eigenvalues of a symmetric tridiagonal matrix below sigma.

    Zero pivots are replaced by -pivmin (LAPACK convention) so that exactly
    singular leading minors neither overflow the recurrence nor miscount.
    """
    maxe2 = 1.0
    for i in range(len(off)):
        v = off[i] * off[i]
        if v > maxe2:
            maxe2 = v
    pivmin = 2.2250738585072014e-308 * maxe2
    count = 0
    t = diag[0] - sigma
    if abs(t) < pivmin:
        t = -pivmin
    if t < 0.0:
        count += 1
    for i in range(1, len(diag)):
        t = diag[i] - sigma - off[i - 1] * off[i - 1] / t
        if abs(t) < pivmin:
            t = -pivmin
        if t < 0.0:
            count += 1
    return count
