"""Statistical verification of the extremal bounds.

Draws random unit-mass potentials of either sign class, solves each one, and
checks that every first eigenvalue stays inside [inf, sup] for its class.
Delta-type extrema are additionally approached through box approximations of
the extremal point masses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._rng import SplitMix64, derive_seed
from .eigensolver import lambda1_value
from .errors import ZeroMass
from .extrema import KINDS, all_extrema, inf_minus, inf_plus, sup_minus, sup_plus
from .potential import (
    Potential,
    RobinBC,
    Segment,
    combine,
    delta_approx,
    normalize_mass,
    potential_to_dict,
)

#: slack allowed before a sample counts as violating a bound
BOUND_TOL = 1e-7


@dataclass
class SampleReport:
    """Outcome of a bound-checking run; violations empty on a passing run."""

    n_samples: int
    violations: list = field(default_factory=list)
    min_seen: float | None = None
    max_seen: float | None = None
    extremum_gaps: dict = field(default_factory=dict)
    seed: int = 0


def _draw(rng: SplitMix64, pieces: int, sign: int, concentrated: bool) -> Potential:
    for _ in range(100):
        if concentrated:
            # support pinned to a window of width exactly 1/pieces at a random
            # center, so larger piece counts concentrate the unit mass harder
            width = 1.0 / pieces
            left = rng.next_unit() * (1.0 - width)
            inner = sorted(left + rng.next_unit() * width for _ in range(pieces - 1))
            pts = [left] + inner + [left + width]
        else:
            pts = sorted(rng.next_unit() for _ in range(pieces + 1))
        heights = [rng.next_abs_normal() for _ in range(pieces)]
        segs = tuple(
            Segment(l, r, sign * h)
            for l, r, h in zip(pts, pts[1:], heights)
            if r - l > 1e-14 and h > 0.0
        )
        if segs:
            try:
                return normalize_mass(Potential(segments=segs), sign)
            except ZeroMass:  # pragma: no cover - needs all-zero heights
                continue
    raise ZeroMass("could not draw a potential with positive mass")


def sample_unit_mass(pieces: int, seed: int, sign: int, concentrated: bool = False) -> Potential:
    """Random piecewise-constant potential of the given sign with |mass| = 1.

    Draws pieces+1 breakpoints uniformly (inside a shrinking window when
    ``concentrated``), heights |N(0,1)|, and normalizes the total integral to
    ``sign``.  The stream is splitmix64 seeded with ``seed``, so identical
    arguments reproduce the identical potential.
    """
    if not 1 <= pieces <= 64:
        raise ValueError("pieces must lie in 1..64")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _draw(SplitMix64(seed), pieces, sign, concentrated)


def check_bounds(
    bc: RobinBC,
    n: int,
    pieces_max: int,
    seed: int,
    tol: float = BOUND_TOL,
    concentrated: bool = False,
) -> SampleReport:
    """Solve n random potentials per sign class and compare against the extrema.

    Sample i of class tag (0 for +, 1 for -) draws its piece count and shape
    from the sub-seed ``derive_seed(seed, tag, i)``, so any violating sample
    can be regenerated from the report's seed alone.  Violations are recorded,
    not raised.
    """
    ext = {r.kind: r for r in all_extrema(bc)}
    report = SampleReport(n_samples=0, seed=seed)
    gaps = {k: None for k in KINDS}
    for sign, tag, lo_kind, hi_kind in (
        (1, 0, "m1plus", "M1plus"),
        (-1, 1, "m1minus", "M1minus"),
    ):
        lo = ext[lo_kind].value
        hi = ext[hi_kind].value
        for i in range(n):
            rng = SplitMix64(derive_seed(seed, tag, i))
            # concentrated mode pins the piece count so the support window
            # width 1/pieces_max shrinks as pieces_max grows
            pieces = pieces_max if concentrated else 1 + rng.next_u64() % pieces_max
            q = _draw(rng, pieces, sign, concentrated)
            lam = lambda1_value(q, bc)
            report.n_samples += 1
            if report.min_seen is None or lam < report.min_seen:
                report.min_seen = lam
            if report.max_seen is None or lam > report.max_seen:
                report.max_seen = lam
            for kind in (lo_kind, hi_kind):
                gap = abs(lam - ext[kind].value)
                if gaps[kind] is None or gap < gaps[kind]:
                    gaps[kind] = gap
            if lam < lo - tol:
                report.violations.append(
                    {"potential": potential_to_dict(q), "lambda1": lam, "bound": lo_kind, "gap": lo - lam}
                )
            elif lam > hi + tol:
                report.violations.append(
                    {"potential": potential_to_dict(q), "lambda1": lam, "bound": hi_kind, "gap": lam - hi}
                )
    report.extremum_gaps = gaps
    return report


def approach_extremum(bc: RobinBC, kind: str, depth: int):
    """Eigenvalues along box approximations q_n of the extremal potential.

    Every point mass of the extremal potential is replaced by a box of width
    1/n for n = 2^k, k = 2..depth; summable parts are kept as they are.  For
    the plateau extremum the approximant already equals the extremal
    potential, so the gap is zero at every n.

    Returns a list of (n, lambda1(q_n), |lambda1(q_n) - extremum|).
    """
    if not 2 <= depth <= 14:
        raise ValueError("depth must lie in 2..14")
    maker = {"M1plus": sup_plus, "M1minus": sup_minus, "m1plus": inf_plus, "m1minus": inf_minus}
    if kind not in maker:
        raise ValueError(f"kind must be one of {sorted(maker)}")
    rep = maker[kind](bc)
    out = []
    for k in range(2, depth + 1):
        nn = 2**k
        if rep.q_star.atoms:
            parts = [delta_approx(a.position, nn, a.weight) for a in rep.q_star.atoms]
            if rep.q_star.segments:
                parts.append(Potential(segments=rep.q_star.segments))
            qn = combine(*parts)
        else:
            qn = rep.q_star
        lam = lambda1_value(qn, bc)
        out.append((nn, lam, abs(lam - rep.value)))
    return out
