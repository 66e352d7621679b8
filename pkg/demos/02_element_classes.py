"""Element classification: which elements behave transitively, and from
which side.

Losing transitivity splits the carrier into classes — right-transitive
(rtr), left-transitive (ltr), middle (mtr), fully transitive (tr),
meet/join-associative and distributive elements — with strict inclusions
between them.  The right-transitive part is the raw material for the
interior-based t-norm constructions in demo 05.
"""

import numpy as np

from trelliskit import ALPHAS, classify
from trelliskit.fixtures import CARRIERS

for key in ("pentagon", "hourglass7", "diamond7"):
    t = CARRIERS[key]()
    cls = classify(t)
    print(f"--- {key} ({t.n} elements) ---")
    width = max(len(s) for s in t.names)
    print(" " * width, " ".join(f"{a:>8}" for a in ALPHAS))
    for x, name in enumerate(t.names):
        row = " ".join(f"{'x' if getattr(cls, a)[x] else '.':>8}" for a in ALPHAS)
        print(f"{name:>{width}}", row)

    # the one-sided classes are closed under the matching operation
    rtr = np.flatnonzero(cls.rtr)
    joins = {t.names[v] for v in t.join[np.ix_(rtr, rtr)].ravel()}
    print("joins of rtr elements stay inside rtr:",
          joins <= {t.names[v] for v in rtr})
    print()
