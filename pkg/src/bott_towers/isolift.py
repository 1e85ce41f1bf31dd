"""Filtered isomorphism search between Bott towers.

A filtered ring isomorphism is triangular on degree 2 with +/-1
diagonal: Phi(x'_i) = s_i x_i + tau_i with tau_i supported below level
i.  (Triangularity is forced by filtration preservation in both
directions; a triangular unimodular integer matrix has +/-1 diagonal.)
Given the signs s_1..s_{i-1} and shifts below level i, the level-i shift
is pinned by Phi(a'_i) = s_i a_i + 2 tau_i, so the whole search tree has
exactly 2^n leaves; a branch survives iff tau_i is integral and
tau_i (tau_i - Phi(a'_i)) = 0.  A brute-force matrix search over
bounded triangular maps serves as an independent oracle, and a bounded
unfiltered search is provided as an exploration tool (sound, complete
only within its bound).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .intlinalg import det
from .ring import BottTower, CohClass, TowerMismatchError


@dataclass(frozen=True)
class FilteredIsoWitness:
    """Per-level data Phi(x'_i) = signs[i-1] * x_i + shifts[i-1]."""

    src: BottTower
    dst: BottTower
    signs: tuple
    shifts: tuple  # CohClass values over dst

    def images(self) -> list:
        return [
            s * self.dst.gen(i) + t
            for i, (s, t) in enumerate(zip(self.signs, self.shifts), start=1)
        ]


@dataclass(frozen=True)
class RingHomMatrix:
    """Degree-2 matrix of a ring map: column i is Phi(x'_i) on x_1..x_n."""

    src: BottTower
    dst: BottTower
    images: tuple  # rows, as tuples

    def column(self, i: int) -> list:
        return [row[i - 1] for row in self.images]


def _hom_apply(images, u: CohClass, dst: BottTower) -> CohClass:
    """Apply the ring map sending generator i of u's tower to images[i-1]."""
    acc = dst.zero()
    one = dst.one()
    for s, c in u.terms.items():
        term = c * one
        for i in sorted(s):
            term = term * images[i - 1]
        acc = acc + term
    return acc


def _phi_alpha(src: BottTower, images, i: int, dst: BottTower) -> CohClass:
    """Image of a'_i under the partial map defined on generators < i."""
    acc = dst.zero()
    for j, c in enumerate(src.coeffs[i - 1], start=1):
        if c:
            acc = acc + c * images[j - 1]
    return acc


def apply_witness(witness: FilteredIsoWitness, u: CohClass) -> CohClass:
    """Image of u (a class over the source tower) under the witness map."""
    if u.tower != witness.src:
        raise TowerMismatchError("class does not live over the witness source")
    for i, t in enumerate(witness.shifts, start=1):
        if t.filtration_level() > i - 1:
            raise ValueError(f"shift {i} violates the filtration")
    return _hom_apply(witness.images(), u, witness.dst)


def verify_witness(src: BottTower, dst: BottTower, witness: FilteredIsoWitness) -> bool:
    """Exact check of all witness invariants, level by level."""
    if src.n != dst.n:
        raise ValueError("towers have different heights")
    n = src.n
    if len(witness.signs) != n or len(witness.shifts) != n:
        return False
    if any(s not in (1, -1) for s in witness.signs):
        return False
    images = witness.images()
    for i in range(1, n + 1):
        tau = witness.shifts[i - 1]
        if not tau.is_homogeneous(2):
            return False
        if tau.filtration_level() > i - 1:
            return False
        w = _phi_alpha(src, images, i, dst)
        if w != witness.signs[i - 1] * dst.alpha(i) + 2 * tau:
            return False
        if not (tau * (tau - w)).is_zero():
            return False
    return True


def find_tower_iso(src: BottTower, dst: BottTower) -> Optional[FilteredIsoWitness]:
    """First filtered isomorphism witness in sign order (+1 before -1).

    Returns None exactly when no filtered isomorphism exists; the 2^n
    sign tree is exhaustive because each shift is determined by the sign
    choices below it.
    """
    if src.n != dst.n:
        raise ValueError("towers have different heights")
    n = src.n

    def rec(i, signs, shifts, images):
        if i > n:
            return FilteredIsoWitness(src, dst, tuple(signs), tuple(shifts))
        w = _phi_alpha(src, images, i, dst)
        wv = w.deg2_vector()
        av = dst.alpha(i).deg2_vector()
        for s in (1, -1):
            delta = [wc - s * ac for wc, ac in zip(wv, av)]
            if any(c % 2 for c in delta):
                continue
            tau = dst.class_from_deg2([c // 2 for c in delta])
            if not (tau * (tau - w)).is_zero():
                continue
            found = rec(
                i + 1,
                signs + [s],
                shifts + [tau],
                images + [s * dst.gen(i) + tau],
            )
            if found is not None:
                return found
        return None

    return rec(1, [], [], [])


def fiber_automorphisms(base: BottTower, alpha: CohClass) -> list:
    """All algebra automorphism data (s, a') of the extension X^2 = alpha X.

    Runs the projectivization solver with both classes equal and keeps
    every solution; the result is always {(+1, 0), (-1, alpha)}.
    """
    from .bundles import proj_iso_solutions

    return [(w.s, w.alpha_prime) for w in proj_iso_solutions(alpha, alpha)]


def brute_force_filtered_iso(
    src: BottTower, dst: BottTower, bound: int
) -> Optional[RingHomMatrix]:
    """Independent oracle: exhaustive triangular matrix search.

    Looks for a lower-triangular degree-2 matrix with +/-1 diagonal and
    off-diagonal entries in [-bound, bound] satisfying all ring-map
    relations Phi(x'_i)^2 = Phi(a'_i) Phi(x'_i); complete for shifts
    within the bound.
    """
    if src.n != dst.n:
        raise ValueError("towers have different heights")
    n = src.n

    def rec(i, images):
        if i > n:
            cols = [img.deg2_vector() for img in images]
            rows = tuple(tuple(col[r] for col in cols) for r in range(n))
            return RingHomMatrix(src, dst, rows)
        w = _phi_alpha(src, images, i, dst)
        for diag in (1, -1):
            for off in product(range(-bound, bound + 1), repeat=i - 1):
                vec = [0] * n
                vec[i - 1] = diag
                for j, c in enumerate(off):
                    vec[j] = c
                z = dst.class_from_deg2(vec)
                if z * z != w * z:
                    continue
                found = rec(i + 1, images + [z])
                if found is not None:
                    return found
        return None

    return rec(1, [])


def bounded_ring_iso_search(
    src: BottTower, dst: BottTower, bound: int
) -> Optional[RingHomMatrix]:
    """Bounded search for an unfiltered ring isomorphism on degree 2.

    Candidate generator images are box classes z with z (z - Phi(a'_i))
    = 0 (every generator image of a true isomorphism is one coordinate
    of a primitive vanishing pair); the final matrix must be unimodular.
    Sound always; "None" means only "none within bound".
    """
    if src.n != dst.n:
        raise ValueError("towers have different heights")
    n = src.n

    def rec(i, images):
        if i > n:
            cols = [img.deg2_vector() for img in images]
            M = [[col[r] for col in cols] for r in range(n)]
            if abs(det(M)) != 1:
                return None
            return RingHomMatrix(src, dst, tuple(tuple(r) for r in M))
        w = _phi_alpha(src, images, i, dst)
        # diagonal-like images first so equal towers yield the identity
        e_i = tuple(1 if j == i - 1 else 0 for j in range(n))
        candidates = sorted(
            (v for v in product(range(-bound, bound + 1), repeat=n) if any(v)),
            key=lambda v: (v != e_i, v != tuple(-c for c in e_i), v),
        )
        for vec in candidates:
            z = dst.class_from_deg2(vec)
            if z * z != w * z:
                continue
            found = rec(i + 1, images + [z])
            if found is not None:
                return found
        return None

    return rec(1, [])


def invert_witness(witness: FilteredIsoWitness) -> FilteredIsoWitness:
    """The inverse filtered isomorphism, built by forward substitution."""
    src, dst = witness.src, witness.dst
    n = src.n
    inv_images = []  # classes over src; image of x_i under the inverse
    for i in range(1, n + 1):
        s = witness.signs[i - 1]
        tau = witness.shifts[i - 1]  # over dst, level <= i-1
        tau_back = _hom_apply(inv_images + [src.zero()] * (n - i + 1), tau, src)
        inv_images.append(s * (src.gen(i) - tau_back))
    signs = tuple(witness.signs)
    shifts = tuple(
        inv_images[i - 1] - signs[i - 1] * src.gen(i) for i in range(1, n + 1)
    )
    # Phi(x_i) = s_i x_i + (inv_image - s_i x_i); repackage in witness shape
    return FilteredIsoWitness(dst, src, signs, shifts)


def compose_witness(
    outer: FilteredIsoWitness, inner: FilteredIsoWitness
) -> FilteredIsoWitness:
    """Witness of outer o inner (inner: A -> B, outer: B -> C)."""
    if inner.dst != outer.src:
        raise TowerMismatchError("witnesses do not compose")
    src, dst = inner.src, outer.dst
    n = src.n
    signs = []
    shifts = []
    for i in range(1, n + 1):
        img = apply_witness(outer, inner.images()[i - 1])
        s = img.coefficient((i,))
        signs.append(s)
        shifts.append(img - s * dst.gen(i))
    return FilteredIsoWitness(src, dst, tuple(signs), tuple(shifts))
