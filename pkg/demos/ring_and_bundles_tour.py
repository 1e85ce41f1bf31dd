"""A guided tour of the cohomology ring and bundle decisions.

Run with:  python3 demos/ring_and_bundles_tour.py
"""

from bott_towers import (
    DecBundle,
    enumerate_primitive_vanishing_pairs,
    lemma_form_decompose,
    make_tower,
    projectivizations_isomorphic,
    splits_trivially,
    total_chern,
    vanishing_partners,
)

# A height-2 tower with alpha_2 = x_1: the stage-2 fiber bundle is the
# first Hirzebruch surface.  The ring is Z[x1, x2]/(x1^2, x2^2 - x1 x2).
tower = make_tower(2, [[], [1]])
x1, x2 = tower.gen(1), tower.gen(2)

print("== ring arithmetic ==")
print("x2 * x2        =", x2 * x2)
print("(x1 + x2)^2    =", (x1 + x2) * (x1 + x2))
print("x1 * (x2 - x1) =", x1 * (x2 - x1))

print()
print("== vanishing partners ==")
for z in (x1, x2, x2 - x1):
    partners = vanishing_partners(tower, z)
    print(f"partners of {z}: {[str(p) for p in partners]}")

print()
print("== primitive vanishing pairs in the box [-2, 2] ==")
pairs = enumerate_primitive_vanishing_pairs(tower, 2)
print(f"{len(pairs)} pairs; a few of them with their canonical shapes:")
for pair in pairs[:6]:
    form = lemma_form_decompose(tower, pair)
    print(
        f"  ({pair.z}, {pair.zbar})  ->  j={form.j}, a={form.a}, "
        f"u={form.u}, sign={form.sign:+d}"
    )

print()
print("== rank-2 bundles ==")
# The tautological subbundle at stage 2 and its orthogonal complement
# split off a trivial summand: c2 vanishes.
b = DecBundle(x2, -x2 + x1)
tc = total_chern(b)
print("summands (x2, x1 - x2):  c1 =", tc.c1, "  c2 =", tc.c2)
print("splits trivially:", splits_trivially(b))

print()
print("== projectivizations ==")
# Over a point-like factor the even and odd twists of the sphere bundle
# are distinguished; the parity of c1 is the only obstruction here.
zero = tower.zero()
for beta in (2 * x1, x1):
    w = projectivizations_isomorphic(zero, beta)
    if w is None:
        print(f"P(C+O) vs P(C+L_[{beta}]): not isomorphic")
    else:
        print(
            f"P(C+O) vs P(C+L_[{beta}]): isomorphic, s={w.s:+d}, "
            f"alpha'={w.alpha_prime}"
        )
