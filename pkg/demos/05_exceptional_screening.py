"""Heuristic screening for exceptional primes.

Three bounded congruence tests: a fixed j with a_p = p^j + p^{k-1-j} for all
scanned p flags a reducible candidate, a_p = 0 on all non-residue p flags a
dihedral candidate, and projective orders confined to {1,...,5} flag a small
polyhedral image.  The classical controls for the weight 12 form light up
exactly as expected, while the six working pairs come out clean.
"""

from thetatwist import screen_exceptional

print("the six pairs used throughout (scan primes to 200):")
for k, ell in ((16, 13), (20, 17), (22, 11), (22, 19), (26, 13), (26, 23)):
    rep = screen_exceptional(k, ell, 200)
    print(f"  ({k:>2}, {ell:>2}): {rep.verdict}")

print("\nclassical controls for weight 12:")
for ell, what in ((691, "a_p = 1 + p^11"), (23, "a_p = 0 on non-residues")):
    rep = screen_exceptional(12, ell, 200)
    flags = []
    if rep.reducible_candidate:
        flags.append(f"reducible (j={rep.reducible_j})")
    if rep.dihedral_candidate:
        flags.append("dihedral")
    if rep.small_image_candidate:
        flags.append("small image")
    print(f"  (12, {ell:>3}): {rep.verdict} -- {', '.join(flags)}   [{what}]")

print("\nthese are candidate flags from a bounded scan, evidence rather than proof")
