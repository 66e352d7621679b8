"""Every t-norm construction in the library, on carriers where each one
applies, with the full axiom report printed for the interesting cases.

A t-norm here is a commutative, associative, JOINTLY increasing binary
operation with the top as neutral element.  On non-transitive carriers
the meet itself usually fails the increasing part, which is what makes
the constructions below worth having.
"""

from trelliskit import (
    check,
    join_cover_condition,
    meet_op,
    scaled_meet,
    t_coatom,
    t_drastic,
    t_join_cover,
    tnorm_via_subset,
)
from trelliskit.fixtures import CARRIERS


def show(tag, op):
    rep = check(op)
    names = op.names
    print(f"{tag}: t-norm={rep.is_tnorm}")
    width = max(len(s) for s in names)
    head = " ".join(f"{s:>{width}}" for s in names)
    print(" " * width, head)
    for x, row in enumerate(op.table):
        print(f"{names[x]:>{width}}", " ".join(f"{names[v]:>{width}}" for v in row))
    print()


pentagon = CARRIERS["pentagon"]()

# the meet is NOT a t-norm here: one-sided monotonicity already fails
rep = check(meet_op(pentagon))
print("pentagon meet: increasing =", rep.increasing,
      " witness =", [pentagon.names[v] for v in rep.witnesses["increasing"]])
print()

# the drastic t-norm exists on every bounded carrier, and is the least one
show("drastic", t_drastic(pentagon))

# every co-atom induces a t-norm
show("co-atom c", t_coatom(pentagon, pentagon.index("c")))

# the join-cover construction needs its covering condition
fork = CARRIERS["fork8"]()
print("fork8 join-cover condition:", join_cover_condition(fork))
show("fork8 join-cover", t_join_cover(fork))

# interior-based: restrict attention to a well-behaved subset
hourglass = CARRIERS["hourglass7"]()
members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
show("hourglass via rtr subset", tnorm_via_subset(hourglass, members))

# same thing, but gating the subset through a scaled meet
v = scaled_meet(hourglass, members, hourglass.index("c"))
show("hourglass via rtr subset, gated at c", tnorm_via_subset(hourglass, members, v))
