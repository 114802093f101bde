"""One verified representative for every row of the extended table.

Run:  python demos/05_representatives.py
"""

from spindual import TARGETS, representative, verify_representative, zero_pattern

print(f"{'label':>6} {'route':>18} {'fpk-mod':>8}  pattern  notes")
print("-" * 100)
for target in TARGETS:
    rep = representative(target)
    result = verify_representative(rep)
    flags = "".join("0" if z else "x" for z in zero_pattern(rep.bilinear_set))
    fpk = "ok" if rep.fpk_consistent_modification else "broken"
    note = rep.notes.split(";")[0]
    print(f"{target:>6} {rep.route:>18} {fpk:>8}  {flags}   {note[:70]}")
    assert result.ok

print("-" * 100)
print("pattern key: x = nonzero block, 0 = zero block, order (Phi, Theta, U, S, M)")
print()
print("route 'first_principles': the bilinears come from an actual (spinor, dual)")
print("pair via matrices.  route 'formal': part of the seed set is replaced by the")
print("recipe's imposed constraint before the closed forms are applied; for 6.1 and")
print("7 the modified set still satisfies every Fierz identity ('fpk-mod ok').")
