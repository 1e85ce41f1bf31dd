"""Rank-2 decomposable bundles over Bott manifolds, at the Chern level.

A line bundle over these base manifolds is determined by its first Chern
class, so a rank-2 decomposable bundle is just an unordered pair of
degree-2 classes.  Total Chern classes classify such bundles, which
turns bundle isomorphism, trivial splitting, and the projectivization
isomorphism question into exact ring computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ring import CohClass, NotHomogeneousError, TowerMismatchError, subset_key


def _check_deg2(u: CohClass, what: str):
    if not u.is_homogeneous(2):
        raise NotHomogeneousError(f"{what} must be homogeneous of degree 2")


def _class_sort_key(u: CohClass):
    return [(subset_key(s), c) for s, c in u.sorted_terms()]


@dataclass(frozen=True)
class DecBundle:
    """Unordered pair of line-bundle first Chern classes; rank 2 only."""

    alpha: CohClass
    beta: CohClass

    def __post_init__(self):
        if self.alpha.tower != self.beta.tower:
            raise TowerMismatchError("summands live over different towers")
        _check_deg2(self.alpha, "summand")
        _check_deg2(self.beta, "summand")
        # canonical order makes the pair genuinely unordered
        if _class_sort_key(self.alpha) > _class_sort_key(self.beta):
            a, b = self.alpha, self.beta
            object.__setattr__(self, "alpha", b)
            object.__setattr__(self, "beta", a)

    @property
    def tower(self):
        return self.alpha.tower


@dataclass(frozen=True)
class TotalChern:
    c1: CohClass
    c2: CohClass


@dataclass(frozen=True)
class ProjIsoWitness:
    """Generator image X -> s X + alpha_prime realizing an algebra iso."""

    s: int
    alpha_prime: CohClass


def total_chern(bundle: DecBundle) -> TotalChern:
    """(c1, c2) = (alpha + beta, alpha * beta)."""
    return TotalChern(bundle.alpha + bundle.beta, bundle.alpha * bundle.beta)


def bundles_isomorphic(b1: DecBundle, b2: DecBundle) -> bool:
    """Topological isomorphism: equality of total Chern classes."""
    if b1.tower != b2.tower:
        raise TowerMismatchError("bundles live over different towers")
    t1, t2 = total_chern(b1), total_chern(b2)
    return t1.c1 == t2.c1 and t1.c2 == t2.c2


def splits_trivially(bundle: DecBundle) -> bool:
    """True iff c2 = 0, i.e. the bundle is trivial-plus-line."""
    return (bundle.alpha * bundle.beta).is_zero()


def twist(bundle: DecBundle, lam: CohClass) -> DecBundle:
    """Tensor both summands by the line bundle with first Chern class lam."""
    if lam.tower != bundle.tower:
        raise TowerMismatchError("twisting class lives over a different tower")
    _check_deg2(lam, "twisting class")
    return DecBundle(bundle.alpha + lam, bundle.beta + lam)


def scaled_split_check(alpha: CohClass, beta: CohClass, a: int, b: int) -> bool:
    """Whether (a*alpha)(b*beta) = 0; forced whenever alpha*beta = 0.

    When the hypothesis alpha*beta = 0 fails the check is vacuous and
    still returns True; callers wanting to flag that case should test
    the hypothesis separately.
    """
    if alpha.tower != beta.tower:
        raise TowerMismatchError("classes live over different towers")
    if not (alpha * beta).is_zero():
        return True
    return ((a * alpha) * (b * beta)).is_zero()


def proj_iso_solutions(alpha: CohClass, beta: CohClass) -> list:
    """All (s, alpha_prime) with alpha = s(beta - 2 alpha_prime) and
    alpha_prime (alpha_prime - beta) = 0; s = +1 listed first."""
    if alpha.tower != beta.tower:
        raise TowerMismatchError("classes live over different towers")
    _check_deg2(alpha, "alpha")
    _check_deg2(beta, "beta")
    tower = alpha.tower
    out = []
    for s in (1, -1):
        delta = (beta - s * alpha).deg2_vector()
        if any(c % 2 for c in delta):
            continue
        ap = tower.class_from_deg2([c // 2 for c in delta])
        if (ap * (ap - beta)).is_zero():
            out.append(ProjIsoWitness(s, ap))
    return out


def projectivizations_isomorphic(
    alpha: CohClass, beta: CohClass
) -> Optional[ProjIsoWitness]:
    """Witness that P(C + L_alpha) and P(C + L_beta) are isomorphic, or None.

    A witness exists iff the two projectivizations are isomorphic as
    bundles; s = -1 corresponds to composing with fiberwise complex
    conjugation.
    """
    sols = proj_iso_solutions(alpha, beta)
    return sols[0] if sols else None
