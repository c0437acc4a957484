"""Boundary coefficients and piecewise-constant potentials with Dirac atoms.

A potential on [0, 1] is a sorted list of constant-value segments with
disjoint interiors (gaps count as value 0) plus a list of weighted point
masses.  All types are frozen dataclasses and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

import numpy as np

from .errors import MixedSign, ZeroMass

#: positions closer than this are treated as the same point
MERGE_TOL = 1e-12


@dataclass(frozen=True)
class RobinBC:
    """Boundary coefficient pair: y'(0) = k0sq*y(0) and y'(1) = -k1sq*y(1).

    User-facing pairs must satisfy k0sq >= 0 and k1sq >= k0sq.  Solvers also
    work with arbitrary real effective coefficients (as produced by folding
    endpoint atoms); construct those with ``validate=False``.
    """

    k0sq: float
    k1sq: float
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        object.__setattr__(self, "k0sq", float(self.k0sq))
        object.__setattr__(self, "k1sq", float(self.k1sq))
        if not (math.isfinite(self.k0sq) and math.isfinite(self.k1sq)):
            raise ValueError("boundary coefficients must be finite")
        if validate:
            if self.k0sq < 0.0:
                raise ValueError(f"k0sq must be >= 0, got {self.k0sq}")
            if self.k1sq < self.k0sq:
                raise ValueError(
                    f"k1sq must be >= k0sq, got k0sq={self.k0sq}, k1sq={self.k1sq}"
                )


@dataclass(frozen=True)
class Segment:
    """Constant potential of the given value on [left, right]."""

    left: float
    right: float
    value: float

    def __post_init__(self):
        if not (0.0 <= self.left < self.right <= 1.0):
            raise ValueError(
                f"segment needs 0 <= left < right <= 1, got [{self.left}, {self.right}]"
            )

    @property
    def width(self) -> float:
        return self.right - self.left


@dataclass(frozen=True)
class DeltaAtom:
    """Point mass of the given weight at position z in [0, 1]."""

    position: float
    weight: float

    def __post_init__(self):
        if not 0.0 <= self.position <= 1.0:
            raise ValueError(f"atom position must lie in [0, 1], got {self.position}")


@dataclass(frozen=True)
class Potential:
    """Piecewise-constant part plus Dirac atoms.

    Segments are stored sorted by left endpoint and must have disjoint
    interiors; use :func:`combine` to sum overlapping pieces.  Atoms closer
    than ``MERGE_TOL`` are merged by weight addition and zero-weight atoms are
    dropped.
    """

    segments: tuple = ()
    atoms: tuple = ()

    def __post_init__(self):
        segs = tuple(sorted(self.segments, key=lambda s: s.left))
        for a, b in zip(segs, segs[1:]):
            if b.left < a.right - MERGE_TOL:
                raise ValueError(
                    f"segments overlap: [{a.left}, {a.right}] and [{b.left}, {b.right}]"
                )
        merged = []
        for atom in sorted(self.atoms, key=lambda a: a.position):
            if merged and abs(atom.position - merged[-1].position) <= MERGE_TOL:
                merged[-1] = DeltaAtom(merged[-1].position, merged[-1].weight + atom.weight)
            else:
                merged.append(atom)
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "atoms", tuple(a for a in merged if a.weight != 0.0))

    def breakpoints(self):
        """Sorted positions where the potential changes: segment edges and atoms."""
        pts = {0.0, 1.0}
        for s in self.segments:
            pts.add(s.left)
            pts.add(s.right)
        for a in self.atoms:
            pts.add(a.position)
        return sorted(pts)

    def value_at(self, x):
        """Piecewise value at points x (segment edges resolve to the segment value)."""
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for s in self.segments:
            out = np.where((x >= s.left) & (x <= s.right), s.value, out)
        return out


def total_integral(q: Potential) -> float:
    """Integral of q over [0, 1]: segment value*width plus atom weights."""
    tot = 0.0
    for s in q.segments:
        tot += s.value * s.width
    for a in q.atoms:
        tot += a.weight
    return tot


def normalize_mass(q: Potential, sign: int) -> Potential:
    """Scale q so its total integral equals sign (+1 or -1).

    All segment values and atom weights must already carry the target sign.
    Raises ZeroMass when the total integral vanishes and MixedSign when
    values of both signs (or only the wrong sign) are present.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    entries = [s.value for s in q.segments] + [a.weight for a in q.atoms]
    if any(v * sign < 0.0 for v in entries):
        if any(v * sign > 0.0 for v in entries):
            raise MixedSign("potential mixes positive and negative parts")
        raise MixedSign(f"potential sign does not match requested class sign {sign:+d}")
    tot = total_integral(q)
    if tot == 0.0:
        raise ZeroMass("total integral is zero")
    c = sign / tot
    return Potential(
        segments=tuple(Segment(s.left, s.right, s.value * c) for s in q.segments),
        atoms=tuple(DeltaAtom(a.position, a.weight * c) for a in q.atoms),
    )


def delta_approx(zeta: float, n: int, weight: float) -> Potential:
    """Box approximation of weight*delta_zeta: width 1/n, height n*weight.

    The box is centered at zeta and shifted inward at the endpoints so the
    width (and hence the total integral) is preserved exactly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= zeta <= 1.0:
        raise ValueError("zeta must lie in [0, 1]")
    w = 1.0 / n
    left = zeta - 0.5 * w
    if left < 0.0:
        left = 0.0
    elif left + w > 1.0:
        left = 1.0 - w
    return Potential(segments=(Segment(left, left + w, n * weight),))


def fold_endpoint_atoms(q: Potential, bc: RobinBC):
    """Absorb atoms sitting at x=0 or x=1 into the boundary coefficients.

    An atom of weight a at 0 becomes k0sq + a; at 1 it becomes k1sq + a.
    Interior atoms are untouched.  The returned RobinBC is an effective pair
    and may violate the user-facing invariants.
    """
    k0, k1 = bc.k0sq, bc.k1sq
    interior = []
    for a in q.atoms:
        if a.position <= MERGE_TOL:
            k0 += a.weight
        elif a.position >= 1.0 - MERGE_TOL:
            k1 += a.weight
        else:
            interior.append(a)
    if len(interior) == len(q.atoms):
        return q, bc
    return Potential(segments=q.segments, atoms=tuple(interior)), RobinBC(k0, k1, validate=False)


def combine(*potentials: Potential) -> Potential:
    """Pointwise sum of potentials, splitting segments so interiors stay disjoint."""
    edges = {0.0, 1.0}
    for q in potentials:
        for s in q.segments:
            edges.add(s.left)
            edges.add(s.right)
    edges = sorted(edges)
    segs = []
    for l, r in zip(edges, edges[1:]):
        if r - l <= MERGE_TOL:
            continue
        mid = 0.5 * (l + r)
        v = 0.0
        for q in potentials:
            for s in q.segments:
                if s.left <= mid <= s.right:
                    v += s.value
        if v != 0.0:
            segs.append(Segment(l, r, v))
    atoms = [a for q in potentials for a in q.atoms]
    return Potential(segments=tuple(segs), atoms=tuple(atoms))


def scale(q: Potential, c: float) -> Potential:
    """Potential multiplied by the constant c."""
    return Potential(
        segments=tuple(Segment(s.left, s.right, s.value * c) for s in q.segments),
        atoms=tuple(DeltaAtom(a.position, a.weight * c) for a in q.atoms),
    )


def compile_arrays(q: Potential):
    """Flatten q into (edges, vals, atomw) arrays for the shooting kernels.

    edges covers [0, 1] with every segment edge and atom position as a
    breakpoint; vals[i] is the constant value on cell i and atomw[i] the atom
    weight at edges[i].  Endpoint atoms must be folded away first.
    """
    for a in q.atoms:
        if a.position <= MERGE_TOL or a.position >= 1.0 - MERGE_TOL:
            raise ValueError("endpoint atoms must be folded with fold_endpoint_atoms")
    pts = q.breakpoints()
    edges = [pts[0]]
    for p in pts[1:]:
        if p - edges[-1] > MERGE_TOL:
            edges.append(p)
    edges[0], edges[-1] = 0.0, 1.0
    edges = np.asarray(edges, dtype=float)
    mids = 0.5 * (edges[1:] + edges[:-1])
    vals = q.value_at(mids)
    atomw = np.zeros(len(edges))
    for a in q.atoms:
        i = int(np.argmin(np.abs(edges - a.position)))
        atomw[i] += a.weight
    return edges, vals, atomw


def potential_to_dict(q: Potential) -> dict:
    """JSON-schema dict: {"segments": [{"l", "r", "v"}], "atoms": [{"z", "w"}]}."""
    return {
        "segments": [{"l": s.left, "r": s.right, "v": s.value} for s in q.segments],
        "atoms": [{"z": a.position, "w": a.weight} for a in q.atoms],
    }


def potential_from_dict(d: dict) -> Potential:
    """Inverse of :func:`potential_to_dict`."""
    segs = tuple(Segment(float(s["l"]), float(s["r"]), float(s["v"])) for s in d.get("segments", []))
    atoms = tuple(DeltaAtom(float(a["z"]), float(a["w"])) for a in d.get("atoms", []))
    return Potential(segments=segs, atoms=atoms)
