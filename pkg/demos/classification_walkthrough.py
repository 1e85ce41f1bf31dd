"""Classify bounded families of towers and cross-validate the result.

Run with:  python3 demos/classification_walkthrough.py
"""

from bott_towers import (
    apply_witness,
    cross_validate,
    enumerate_towers,
    find_tower_iso,
    make_tower,
    partition_towers,
)
from bott_towers.classify import report_table

print("== a single isomorphism, with its witness ==")
src = make_tower(2, [[], [3]])
dst = make_tower(2, [[], [1]])
w = find_tower_iso(src, dst)
print(f"towers {list(map(list, src.coeffs))} and {list(map(list, dst.coeffs))}:")
print("  signs :", w.signs)
print("  shifts:", [str(t) for t in w.shifts])
print("  x'_2 maps to", apply_witness(w, src.gen(2)))

print()
print("== height 2, entries in [-4, 4] ==")
fam = enumerate_towers(2, 4)
part = partition_towers(fam)
print(report_table(fam, part))
print("(the single entry's parity is a complete invariant at height 2)")

print()
print("== height 3, entries in [-1, 1], cross-validated ==")
fam = enumerate_towers(3, 1)
report = cross_validate(fam, oracle_bound=4)
print(
    f"{report['num_towers']} towers fall into {report['num_classes']} classes; "
    f"lifting and brute-force partitions agree: {report['agree']}"
)
print(report_table(fam, partition_towers(fam)))
