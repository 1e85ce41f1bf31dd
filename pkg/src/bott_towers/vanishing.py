"""Vanishing partners of degree-2 classes and primitive vanishing pairs.

A vanishing pair is an ordered pair (z, zbar) of degree-2 classes with
z * zbar = 0; it is primitive when both coordinate vectors are.  Every
primitive vanishing pair decomposes as (a x_j + u, +/-(a (x_j - a_j) - u))
with u supported below level j and u (u + a a_j) = 0; this module both
enumerates pairs by brute force and recovers that decomposition.

The set of vanishing pairs is infinite in general, so enumeration is
always restricted to a coefficient sup-norm box and is exhaustive only
within it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .intlinalg import is_primitive, kernel_basis, lattice_points_in_box
from .ring import BottTower, CohClass, NotHomogeneousError


@dataclass(frozen=True)
class VanishingPair:
    z: CohClass
    zbar: CohClass


@dataclass(frozen=True)
class LemmaForm:
    """Decomposition z = a x_j + u, zbar = sign * (a (x_j - a_j) - u)."""

    j: int
    a: int
    u: CohClass
    sign: int


def mult_map_deg2(tower: BottTower, z: CohClass) -> list:
    """Matrix of w -> z*w from H^2 to H^4 (rows: 2-subsets in basis order)."""
    if not z.is_homogeneous(2):
        raise NotHomogeneousError("multiplication class must have degree 2")
    rows = tower.subsets_of_size(2)
    row_index = {frozenset(s): i for i, s in enumerate(rows)}
    M = [[0] * tower.n for _ in rows]
    for i in range(1, tower.n + 1):
        col = z * tower.gen(i)
        for s, c in col.terms.items():
            M[row_index[s]][i - 1] = c
    return M


def vanishing_partners(tower: BottTower, z: CohClass) -> list:
    """A saturated lattice basis of {w in H^2 : z*w = 0}."""
    basis = kernel_basis(mult_map_deg2(tower, z), cols=tower.n)
    return [tower.class_from_deg2(v) for v in basis]


def enumerate_primitive_vanishing_pairs(tower: BottTower, bound: int) -> list:
    """All primitive vanishing pairs with coefficients in [-bound, bound].

    Brute force: for each primitive z in the box, the partners are the
    kernel lattice of multiplication by z intersected with the box.
    Output is ordered lexicographically on (z coefficients, zbar
    coefficients); both orders of a pair appear when both qualify.
    """
    if bound < 1:
        return []
    n = tower.n
    pairs = []
    for zvec in product(range(-bound, bound + 1), repeat=n):
        if not is_primitive(zvec):
            continue
        z = tower.class_from_deg2(zvec)
        basis = kernel_basis(mult_map_deg2(tower, z), cols=tower.n)
        partners = [
            w for w in lattice_points_in_box(basis, bound) if is_primitive(w)
        ]
        partners.sort()
        for wvec in partners:
            pairs.append(VanishingPair(z, tower.class_from_deg2(wvec)))
    return pairs


def lemma_form_decompose(tower: BottTower, pair: VanishingPair) -> Optional[LemmaForm]:
    """Recover (j, a, u, sign) for a primitive vanishing pair, if possible.

    j is the filtration level of z, a the coefficient of x_j, u the
    remainder; the decomposition is accepted only when zbar matches
    +/-(a (x_j - a_j) - u) and u (u + a a_j) = 0.
    """
    z, zbar = pair.z, pair.zbar
    if not (z * zbar).is_zero():
        raise ValueError("not a vanishing pair: product is nonzero")
    j = z.filtration_level()
    if j == 0:
        return None
    a = z.coefficient((j,))
    if a == 0:
        return None
    u = z - a * tower.gen(j)
    alpha_j = tower.alpha(j)
    if not (u * (u + a * alpha_j)).is_zero():
        return None
    partner = a * (tower.gen(j) - alpha_j) - u
    if zbar == partner:
        sign = 1
    elif zbar == -partner:
        sign = -1
    else:
        return None
    return LemmaForm(j=j, a=a, u=u, sign=sign)
