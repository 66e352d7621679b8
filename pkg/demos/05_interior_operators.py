"""Interior operators and why their range must be right-transitive and
meet-closed.

An interior operator is contractive, idempotent and meet-preserving; each
subset A (bottom included, members right-transitive) induces one by
sending x to the join of the A-members below x.  Feeding its images into
a meet on the range yields a t-norm — and the diamond7 carrier shows how
the recipe breaks when the range is not closed under meets.
"""

import numpy as np

from trelliskit import (
    check,
    classify,
    interior_from_subset,
    tnorm_via_subset,
    validate_interior,
)
from trelliskit.fixtures import CARRIERS

hourglass = CARRIERS["hourglass7"]()
members = sorted(hourglass.indices(("0", "b", "c")))
im = interior_from_subset(hourglass, members)
print("interior for {0, b, c} on the hourglass:")
for x in range(hourglass.n):
    print(f"  {hourglass.names[x]} -> {hourglass.names[im(x)]}")
print("axioms ok:", validate_interior(hourglass, im).ok)
print("t-norm from it:", check(tnorm_via_subset(hourglass, members)).is_tnorm)
print()

# now the cautionary tale: diamond7's right-transitive part is NOT
# meet-closed (c ^ d = b falls outside), and skipping the checks
# produces a table that fails monotonicity
d7 = CARRIERS["diamond7"]()
cls = classify(d7)
rtr = sorted(np.flatnonzero(cls.rtr))
print("diamond7 rtr:", [d7.names[x] for x in rtr])
c, d = d7.index("c"), d7.index("d")
print("c ^ d =", d7.names[d7.meet[c, d]], "(outside rtr)")

im = interior_from_subset(d7, rtr)
report = validate_interior(d7, im)
print("interior axioms ok:", report.ok,
      " meet violations:", [tuple(d7.names[v] for v in w) for w in report.meet_homomorphism])

op = tnorm_via_subset(d7, rtr, unchecked=True)  # force the formula anyway
rep = check(op)
print("forced table increasing:", rep.increasing,
      " witness:", [d7.names[v] for v in rep.witnesses["increasing"]])
