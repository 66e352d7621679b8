"""The document format, and the random-instance law suite in miniature.

Carriers live in a small plain-text format (see src/trelliskit/data/);
parse/serialize round-trip byte-for-byte.  The random generators produce
psosets, trellises and pseudo-chains for law checking; the full suite is
`trelliskit verify-paper` (or reproduction.run_all), this just samples a
couple of laws by hand.
"""

import random

import numpy as np

from trelliskit import (
    check_skala_axioms,
    classify,
    make_document,
    random_pseudo_chain,
    random_trellis,
)
from trelliskit.fileformat import parse, serialize
from trelliskit.fixtures import CARRIERS

# round-trip a document
doc = make_document(CARRIERS["pentagon"](), with_tables=True)
text = serialize(doc)
print(text)
print("round-trips byte-for-byte:", serialize(parse(text)) == text)

# random trellises satisfy the algebraic axioms by construction...
rng = random.Random(20260814)
ok = all(
    check_skala_axioms(t.meet, t.join).ok
    for t in (random_trellis(rng, rng.randint(3, 7)) for _ in range(50))
)
print("50 random trellises pass the meet/join axioms:", ok)

# ...and on pseudo-chains the associativity classes all collapse
collapsed = 0
for _ in range(50):
    t = random_pseudo_chain(rng, rng.randint(2, 7))
    cls = classify(t)
    if np.array_equal(cls.ass, cls.tr) and np.array_equal(cls.meet_ass, cls.join_ass):
        collapsed += 1
print("pseudo-chains with collapsed classes: 50 expected,", collapsed, "observed")
