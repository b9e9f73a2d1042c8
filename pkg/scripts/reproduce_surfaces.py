"""Print the strict-transform chain on X^4_8 and the classes of the five surface types."""

from weylcycles.chow import decompose_two_cycle, intersect_strict_transforms
from weylcycles.weyl import surface_by_name, weyl_surface_catalog
from weylcycles.worked import SURFACE_CHAIN

for name, D, F, J, _ in SURFACE_CHAIN:
    dec = decompose_two_cycle(intersect_strict_transforms(D, F), D, F)
    via = f"  (Cr{list(J)} of the previous pair)" if J else ""
    print(f"{D.pretty()}  .  {F.pretty()}{via}")
    print("   = " + " + ".join(dec.names()) + ("" if dec.unique else "   [not unique]"))

print()
for key in [("S1", 1, 4, 5), ("S3", 1, 8), ("S6", 6, 7, 8), ("S10", 1, 2), ("S15", 8)]:
    S = surface_by_name(*key)
    print(f"{S.name:<12} k_S(D) = max(0, -({S.char_cycle.pretty()}).D)")
    print(f"{'':<12} {S.chow_class.pretty()}")
print(f"\n{len(weyl_surface_catalog())} Weyl surfaces in total")
