"""Build a few carriers by hand, validate them, and look at their shape.

A pseudo-order is reflexive and antisymmetric but NOT necessarily
transitive; that one dropped axiom is where all the interesting behaviour
below comes from.
"""

import numpy as np

from trelliskit import (
    build_trellis,
    export_dot,
    hasse,
    maximal_cycles,
    reachable,
    validate_psoset,
)
from trelliskit.fixtures import CARRIERS

# a five-element chain with one order pair removed: a <= b <= c but a || c
rel = np.eye(5, dtype=bool)
names = ("0", "a", "b", "c", "1")
for x, y in [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]:
    rel[x, y] = True
rel[:, 4] = True  # everything below the top
p = validate_psoset(rel, names)

print("carrier:", " ".join(p.names))
print("bottom:", p.names[p.bottom], " top:", p.names[p.top])
print("transitive?", p.is_transitive())
a, b, c = p.index("a"), p.index("b"), p.index("c")
print("a <= b, b <= c, a <= c:", p.leq(a, b), p.leq(b, c), p.leq(a, c))
print("but a reaches c through b:", reachable(p, a, c))

# it still has every meet and join, so it is a trellis (not a lattice)
t, kind = build_trellis(p)
print("trellis?", kind.is_trellis, " lattice?", kind.is_lattice)
print("a ^ c =", p.names[t.meet[a, c]], "  a v c =", p.names[t.join[a, c]])

# non-transitive pairs show up as dashed edges in the diagram
print()
print(export_dot(hasse(p), p.names))

# cycles: the six-element example carrier has one, {d, e, f}
six = CARRIERS["six_cycle"]()
print("maximal cycles of the six-element carrier:",
      [sorted(six.labels(cyc)) for cyc in maximal_cycles(six)])
