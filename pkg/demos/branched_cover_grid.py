"""
Orderability of cyclic branched covers, as a grid
=================================================

For each link below we ask, at every index n from 2 to 12, whether the
fundamental group of the canonical n-fold branched cover is
left-orderable.  Each verdict comes with evidence, and the grid prints
one letter per cell so the shape of the answer is visible at a glance.

  B  orderable, positive first Betti number
  R  orderable, PSL(2,R) rotation-number witness
  f  not orderable, fundamental group is finite
  o  not orderable, no co-oriented taut foliation
"""

from seifertlinks import canonical_star_status, normalize
from seifertlinks.cli import parse_link

GLYPHS = {
    "PositiveBetti": "B",
    "PSL2R_Rep": "R",
    "Catalog": "C",
    "FinitePi1": "f",
    "NoCTF_SeifertObstruction": "o",
}

ROWS = [
    "#1 H+",
    "T(2,3)",
    "T(2,5)",
    "T(3,5)",
    "P(-2,2,3)'",
    "P(-2,2,4)'",
    "L(2,3;3,1)",
]

INDICES = range(2, 13)

print(" " * 12 + " ".join(f"{n:>2}" for n in INDICES))
for name in ROWS:
    link = normalize(parse_link(name))
    cells = []
    for n in INDICES:
        status = canonical_star_status(link, n)
        cells.append(GLYPHS[type(status.evidence).__name__])
    print(f"{name:<12}" + " ".join(f"{c:>2}" for c in cells))

print()

# The Hopf link row is all f: every cyclic branched cover of it is a lens
# space, with cyclic fundamental group.  The trefoil holds out the
# longest among the others.  Its 5-fold cover is the Poincare sphere,
# which is why the f entries stop exactly there.

trefoil = normalize(parse_link("T(2,3)"))
status = canonical_star_status(trefoil, 5)
print("trefoil, n = 5:", status.evidence.group.label,
      "of order", status.evidence.group.group_order)

# T(2,5) turns orderable at n = 4 via a rotation-number witness whose
# cone angles sum to just under one.

status = canonical_star_status(normalize(parse_link("T(2,5)")), 4)
print("T(2,5), n = 4: sigma =", status.evidence.data.sigma,
      "over", status.evidence.data.r, "cone points")

# The o cells are the interesting refusals.  P(-2,2,3)' at n = 3 is an
# isolated case: the cover is a Seifert space whose invariants rule out
# any co-oriented taut foliation even though its group is infinite.

status = canonical_star_status(normalize(parse_link("P(-2,2,3)'")), 3)
print("P(-2,2,3)', n = 3: seifert data", status.evidence.invariants)

# P(-2,2,4)' is o forever: its whole tower of covers carries the same
# obstruction, one of the few families where that happens.
