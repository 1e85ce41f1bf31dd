"""Exact arithmetic in the cohomology ring of a Bott manifold.

The ring of a height-n tower is Z[x_1, ..., x_n] / (x_i^2 - a_i x_i)
where each a_i is an integer combination of x_1, ..., x_{i-1}.  On the
square-free monomial basis {x_S : S subset of {1..n}} the relations form
a confluent rewriting system, so every element has a unique canonical
sparse form and no Groebner machinery is needed.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Mapping


class TowerShapeError(ValueError):
    """Raised when tower coefficient data is not strictly upper triangular."""


class TowerMismatchError(ValueError):
    """Raised when an operation mixes classes over different towers."""


class NotHomogeneousError(ValueError):
    """Raised when an operation needs a homogeneous class and got none."""


def subset_key(s: Iterable[int]) -> tuple:
    """Canonical basis order: by cardinality, then lexicographic."""
    t = tuple(sorted(s))
    return (len(t), t)


class BottTower:
    """Height-n tower data: row i holds the coefficients of a_i.

    ``coeffs[i-1]`` (0-based storage, 1-based semantics) has length i-1
    and gives a_i = sum_j coeffs[i-1][j-1] * x_j.  Immutable; hashable.
    """

    __slots__ = ("n", "coeffs", "_mono_cache")

    def __init__(self, n: int, coeffs):
        coeffs = tuple(tuple(int(c) for c in row) for row in coeffs)
        if len(coeffs) != n:
            raise TowerShapeError(f"expected {n} rows, got {len(coeffs)}")
        for i, row in enumerate(coeffs, start=1):
            if len(row) != i - 1:
                raise TowerShapeError(
                    f"row {i} has length {len(row)}, expected {i - 1}"
                )
        self.n = n
        self.coeffs = coeffs
        self._mono_cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, BottTower) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BottTower(n={self.n}, coeffs={[list(r) for r in self.coeffs]})"

    def zero(self) -> "CohClass":
        return CohClass(self, {})

    def one(self) -> "CohClass":
        return CohClass(self, {frozenset(): 1})

    def gen(self, i: int) -> "CohClass":
        """The degree-2 generator x_i, 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        return CohClass(self, {frozenset((i,)): 1})

    def alpha(self, i: int) -> "CohClass":
        """The defining class a_i (satisfies x_i^2 = a_i x_i)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"stage index {i} out of range 1..{self.n}")
        row = self.coeffs[i - 1]
        return CohClass(
            self, {frozenset((j,)): c for j, c in enumerate(row, start=1) if c}
        )

    def class_from_deg2(self, vec) -> "CohClass":
        """Degree-2 class from its coefficient vector on x_1..x_n."""
        if len(vec) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(vec)}")
        return CohClass(
            self, {frozenset((i,)): int(c) for i, c in enumerate(vec, start=1) if c}
        )

    def deg2_basis(self):
        return [self.gen(i) for i in range(1, self.n + 1)]

    def subsets_of_size(self, k: int):
        """Basis subsets of the degree-2k component, in canonical order."""
        return [tuple(s) for s in combinations(range(1, self.n + 1), k)]

    def _reduce_monomial(self, exps: tuple) -> dict:
        """Normal form of a monomial given as a sorted (index, exponent) tuple.

        Rewrites x_i^2 -> a_i x_i at the highest colliding index first;
        a_i only involves lower indices, so this terminates.
        """
        cached = self._mono_cache.get(exps)
        if cached is not None:
            return cached
        out: dict = {}
        stack = [(exps, 1)]
        while stack:
            mono, c = stack.pop()
            top = None
            for idx, e in reversed(mono):
                if e >= 2:
                    top = idx
                    break
            if top is None:
                key = frozenset(idx for idx, _ in mono)
                out[key] = out.get(key, 0) + c
                continue
            row = self.coeffs[top - 1]
            # x_top^e -> sum_j row[j] * x_j * x_top^(e-1)
            base = {idx: e for idx, e in mono}
            base[top] -= 1
            if base[top] == 0:
                del base[top]
            for j, cj in enumerate(row, start=1):
                if cj == 0:
                    continue
                m2 = dict(base)
                m2[j] = m2.get(j, 0) + 1
                stack.append((tuple(sorted(m2.items())), c * cj))
        out = {s: c for s, c in out.items() if c}
        self._mono_cache[exps] = out
        return out

    def mono_product(self, s: frozenset, t: frozenset) -> dict:
        """Normal form of x_s * x_t as a subset->coefficient dict."""
        if not (s & t):
            return {s | t: 1}
        exps = tuple(sorted((i, (i in s) + (i in t)) for i in s | t))
        return self._reduce_monomial(exps)


class CohClass:
    """An element of H^*(B_n) in canonical sparse form.

    ``terms`` maps frozensets of generator indices to nonzero integer
    coefficients; the empty subset is the unit.  Immutable.
    """

    __slots__ = ("tower", "terms")

    def __init__(self, tower: BottTower, terms: Mapping):
        clean = {}
        for s, c in terms.items():
            c = int(c)
            if c == 0:
                continue
            s = frozenset(s)
            if s and (min(s) < 1 or max(s) > tower.n):
                raise ValueError(f"generator index out of range in {sorted(s)}")
            clean[s] = c
        self.tower = tower
        self.terms = clean

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """2k when homogeneous of degree 2k, None for 0, error otherwise."""
        if not self.terms:
            return None
        sizes = {len(s) for s in self.terms}
        if len(sizes) != 1:
            raise NotHomogeneousError(f"mixed degrees {sorted(2 * k for k in sizes)}")
        return 2 * sizes.pop()

    def is_homogeneous(self, degree: int) -> bool:
        """Zero counts as homogeneous of every degree."""
        return all(2 * len(s) == degree for s in self.terms)

    def filtration_level(self) -> int:
        """Smallest k with the class lying in the height-k subring."""
        return max((max(s) for s in self.terms if s), default=0)

    def deg2_vector(self) -> list:
        """Coefficient vector on x_1..x_n; requires degree 2."""
        if not self.is_homogeneous(2):
            raise NotHomogeneousError("not a degree-2 class")
        vec = [0] * self.tower.n
        for s, c in self.terms.items():
            (i,) = s
            vec[i - 1] = c
        return vec

    def coefficient(self, s: Iterable[int]) -> int:
        return self.terms.get(frozenset(s), 0)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "CohClass"):
        if self.tower is not other.tower and self.tower != other.tower:
            raise TowerMismatchError("classes live over different towers")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return CohClass(self.tower, terms)

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def __neg__(self) -> "CohClass":
        return CohClass(self.tower, {s: -c for s, c in self.terms.items()})

    def __rmul__(self, k: int) -> "CohClass":
        if not isinstance(k, int):
            return NotImplemented
        return CohClass(self.tower, {s: k * c for s, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._check(other)
        acc: dict = {}
        tower = self.tower
        for s, cs in self.terms.items():
            for t, ct in other.terms.items():
                c = cs * ct
                for r, cr in tower.mono_product(s, t).items():
                    acc[r] = acc.get(r, 0) + c * cr
        return CohClass(tower, acc)

    def __eq__(self, other):
        return (
            isinstance(other, CohClass)
            and self.tower == other.tower
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.tower, tuple(sorted(self.terms.items(), key=lambda kv: subset_key(kv[0])))))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: subset_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            mono = "".join(f"x{i}" for i in sorted(s)) or "1"
            parts.append(f"{c:+d}*{mono}")
        return "".join(parts).lstrip("+")


# -- module-level operations ----------------------------------------------


def make_tower(n: int, coeffs) -> BottTower:
    """Validate tower data and build the tower."""
    return BottTower(n, coeffs)


def mul(u: CohClass, v: CohClass) -> CohClass:
    return u * v


def linear_combine(pairs) -> CohClass:
    """Integer linear combination of classes over one tower."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("empty combination has no ambient tower")
    tower = pairs[0][1].tower
    acc: dict = {}
    for k, u in pairs:
        if u.tower != tower:
            raise TowerMismatchError("classes live over different towers")
        for s, c in u.terms.items():
            acc[s] = acc.get(s, 0) + int(k) * c
    return CohClass(tower, acc)


def filtration_level(u: CohClass) -> int:
    return u.filtration_level()


def restrict_stage(tower: BottTower, k: int) -> BottTower:
    """The height-k sub-tower (leading k rows)."""
    if not 0 <= k <= tower.n:
        raise ValueError(f"stage {k} out of range 0..{tower.n}")
    return BottTower(k, tower.coeffs[:k])


def graded_rank(tower: BottTower, k: int) -> int:
    """Rank of the degree-2k component: binomial(n, k)."""
    if k < 0:
        raise ValueError("negative degree")
    return comb(tower.n, k)


def embed(u: CohClass, tower: BottTower) -> CohClass:
    """Reinterpret a class of low filtration level over a taller tower.

    Valid when the towers agree on the stages the class touches.
    """
    lvl = u.filtration_level()
    if lvl > tower.n or u.tower.coeffs[:lvl] != tower.coeffs[:lvl]:
        raise TowerMismatchError("towers disagree below the class's level")
    return CohClass(tower, u.terms)
