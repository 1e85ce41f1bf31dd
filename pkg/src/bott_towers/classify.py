"""Enumeration and pairwise classification of bounded tower families.

The partition realizes the rigidity statement on a finite box: towers
land in one class exactly when a filtered isomorphism witness exists,
and every merging edge stores its witness.  Cross-validation recomputes
the partition with the brute-force triangular search and demands
identical classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .isolift import brute_force_filtered_iso, find_tower_iso, verify_witness
from .ring import BottTower


@dataclass(frozen=True)
class TowerFamily:
    n: int
    bound: int
    towers: tuple


@dataclass(frozen=True)
class Partition:
    classes: tuple  # tuples of tower indices, each sorted, ordered by min
    witnesses: dict  # (i, j) -> FilteredIsoWitness for merging edges


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # representative = lowest index
            if ri > rj:
                ri, rj = rj, ri
            self.parent[rj] = ri


def enumerate_towers(n: int, bound: int) -> TowerFamily:
    """All towers of height n with entries in [-bound, bound], lex order."""
    if n < 1 or bound < 0:
        raise ValueError("need n >= 1 and bound >= 0")
    lengths = [i - 1 for i in range(1, n + 1)]
    total = sum(lengths)
    towers = []
    for flat in product(range(-bound, bound + 1), repeat=total):
        rows, pos = [], 0
        for ln in lengths:
            rows.append(flat[pos : pos + ln])
            pos += ln
        towers.append(BottTower(n, rows))
    return TowerFamily(n, bound, tuple(towers))


def _partition_with(family: TowerFamily, prover) -> Partition:
    """Union-find over pairwise queries, skipping connected pairs."""
    towers = family.towers
    uf = UnionFind(len(towers))
    witnesses = {}
    for i in range(len(towers)):
        for j in range(i + 1, len(towers)):
            if uf.find(i) == uf.find(j):
                continue
            w = prover(towers[i], towers[j])
            if w is not None:
                uf.union(i, j)
                witnesses[(i, j)] = w
    groups = {}
    for i in range(len(towers)):
        groups.setdefault(uf.find(i), []).append(i)
    classes = tuple(
        tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: min(g))
    )
    return Partition(classes, witnesses)


def partition_towers(family: TowerFamily) -> Partition:
    part = _partition_with(family, find_tower_iso)
    for (i, j), w in part.witnesses.items():
        assert verify_witness(family.towers[i], family.towers[j], w)
    return part


def _max_shift_coeff(witness) -> int:
    worst = 0
    for tau in witness.shifts:
        for c in tau.terms.values():
            worst = max(worst, abs(c))
    return worst


def cross_validate(family: TowerFamily, oracle_bound: int) -> dict:
    """Compare the lifting partition against the brute-force oracle.

    Raises if any lifting witness has a shift coefficient beyond the
    oracle bound (the comparison would be meaningless) or if the two
    partitions differ; otherwise returns the agreed report.
    """
    lifted = partition_towers(family)
    for (i, j), w in lifted.witnesses.items():
        worst = _max_shift_coeff(w)
        if worst > oracle_bound:
            raise RuntimeError(
                f"witness for pair ({i}, {j}) has shift coefficient {worst} "
                f"exceeding oracle bound {oracle_bound}; comparison aborted"
            )
    oracle = _partition_with(
        family, lambda a, b: brute_force_filtered_iso(a, b, oracle_bound)
    )
    report = make_report(family, lifted)
    report["oracle_bound"] = oracle_bound
    report["agree"] = lifted.classes == oracle.classes
    if not report["agree"]:
        report["oracle_classes"] = [list(c) for c in oracle.classes]
        report["mismatch"] = _mismatch_detail(family, lifted, oracle)
    return report


def _mismatch_detail(family, lifted, oracle):
    lift_root = {i: c[0] for c in lifted.classes for i in c}
    orac_root = {i: c[0] for c in oracle.classes for i in c}
    out = []
    for i in range(len(family.towers)):
        for j in range(i + 1, len(family.towers)):
            a = lift_root[i] == lift_root[j]
            b = orac_root[i] == orac_root[j]
            if a != b:
                out.append(
                    {
                        "pair": [i, j],
                        "towers": [
                            [list(r) for r in family.towers[i].coeffs],
                            [list(r) for r in family.towers[j].coeffs],
                        ],
                        "lifting_says_isomorphic": a,
                        "oracle_says_isomorphic": b,
                    }
                )
    return out


def make_report(family: TowerFamily, part: Partition) -> dict:
    return {
        "n": family.n,
        "bound": family.bound,
        "num_towers": len(family.towers),
        "num_classes": len(part.classes),
        "classes": [list(c) for c in part.classes],
    }


def report_table(family: TowerFamily, part: Partition) -> str:
    """Aligned text table of the partition, one row per class."""
    lines = [f"{'class':>5}  {'size':>4}  representative"]
    for k, cls in enumerate(part.classes):
        rep = family.towers[cls[0]]
        lines.append(
            f"{k:>5}  {len(cls):>4}  {[list(r) for r in rep.coeffs]}"
        )
    return "\n".join(lines)
