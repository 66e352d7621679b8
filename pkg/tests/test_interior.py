import numpy as np
import pytest

from trelliskit import (
    UnaryMap,
    interior_from_subset,
    interior_range,
    validate_interior,
)
from trelliskit.errors import (
    BottomMissing,
    NotAnInteriorOperator,
    NotRightTransitiveSubset,
)
from trelliskit.fixtures import CARRIERS, RECORDED_INTERIORS, bounded_chain


def map_from_names(t, names):
    return UnaryMap(t, np.array([t.index(s) for s in names.split()], dtype=np.int64))


@pytest.mark.parametrize("key", sorted(RECORDED_INTERIORS))
def test_recorded_interior_maps(key):
    t = CARRIERS[key]()
    expected = map_from_names(t, RECORDED_INTERIORS[key])
    rtr = sorted(t.indices(RECORDED_INTERIORS[key].split()) | {t.bottom})
    # the recorded rows are exactly the subset-interiors of the
    # right-transitive parts
    from trelliskit import classify

    members = sorted(np.flatnonzero(classify(t).rtr))
    got = interior_from_subset(t, members)
    assert np.array_equal(got.map, expected.map), key


def test_identity_is_an_interior_on_a_lattice():
    t = bounded_chain(4)
    ident = UnaryMap(t, np.arange(4, dtype=np.int64))
    report = validate_interior(t, ident)
    assert report.ok
    assert not report.fixed_on_range and not report.increasing
    assert interior_range(t, ident) == frozenset(range(4))


def test_constant_bottom_is_an_interior():
    t = CARRIERS["pentagon"]()
    zero = UnaryMap(t, np.zeros(t.n, dtype=np.int64))
    assert validate_interior(t, zero).ok
    assert interior_range(t, zero) == frozenset({t.bottom})


def test_non_contractive_map_fails():
    t = bounded_chain(3)
    up = UnaryMap(t, np.array([1, 2, 2], dtype=np.int64))
    report = validate_interior(t, up)
    assert not report.ok
    assert report.contractive  # x = 0 maps above itself
    with pytest.raises(NotAnInteriorOperator):
        interior_range(t, up)


def test_non_idempotent_map_fails():
    t = bounded_chain(4)
    down = UnaryMap(t, np.array([0, 0, 1, 2], dtype=np.int64))
    report = validate_interior(t, down)
    assert report.idempotent


def test_meet_escape_breaks_the_homomorphism_axiom():
    # {0, c, d} in the seven-element diamond: c ^ d = b lies outside, so
    # lam(c ^ d) = 0 while lam(c) ^ lam(d) = b
    t = CARRIERS["diamond7"]()
    members = sorted(t.indices(("0", "c", "d")))
    im = interior_from_subset(t, members)
    report = validate_interior(t, im)
    assert not report.ok
    assert report.meet_homomorphism
    c, d = t.index("c"), t.index("d")
    witnesses = {tuple(v) for v in report.meet_homomorphism}
    assert witnesses & {(c, d), (d, c)}
    b = t.meet[c, d]
    assert im(b) != t.meet[im(c), im(d)]


def test_subset_interior_requires_bottom_and_rtr_members():
    t = CARRIERS["pentagon"]()
    with pytest.raises(BottomMissing):
        interior_from_subset(t, t.indices(("b",)))
    with pytest.raises(NotRightTransitiveSubset):
        interior_from_subset(t, t.indices(("0", "a")))  # a is not rtr


def test_subset_interior_fixes_exactly_the_join_closure():
    t = CARRIERS["hourglass7"]()
    members = sorted(t.indices(("0", "b", "c")))
    im = interior_from_subset(t, members)
    assert validate_interior(t, im).ok
    assert im.image() == frozenset(members)
    for x in members:
        assert im(x) == x
    # everything else drops to the biggest member below it
    assert im(t.index("d")) == t.index("c")
    assert im(t.index("a")) == t.bottom


def test_interiors_are_contractive_and_idempotent_by_construction():
    t = CARRIERS["loop8"]()
    members = sorted(t.indices(("0", "a", "d")))
    im = interior_from_subset(t, members)
    for x in range(t.n):
        assert t.leq(im(x), x)
        assert im(im(x)) == im(x)
