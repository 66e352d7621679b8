import numpy as np
import pytest

from trelliskit import (
    check,
    interior_from_subset,
    join_cover_condition,
    join_cover_witness,
    join_op,
    make_op,
    meet_op,
    pointwise_leq,
    restrict,
    scaled_meet,
    t_coatom,
    t_drastic,
    t_join_cover,
    tnorm_via_interior,
    tnorm_via_subset,
)
from trelliskit.errors import (
    ElementNotInSubset,
    NotACoAtom,
    NotASubLattice,
    RangeNotRightTransitive,
    TargetMismatch,
    VNotATnorm,
)
from trelliskit.fixtures import (
    CARRIERS,
    RECORDED_FACTS,
    bounded_chain,
    diamond_lattice,
    recorded_table,
)


def test_make_op_validates_and_freezes(pentagon):
    tab = pentagon.meet.copy()
    op = make_op(pentagon, tab)
    tab[0, 0] = pentagon.top  # caller's copy, not the op's
    assert op(0, 0) == 0
    with pytest.raises(ValueError):
        op.table[0, 0] = 1

    bad = np.full((pentagon.n, pentagon.n), pentagon.n + 3)
    with pytest.raises(ValueError):
        make_op(pentagon, bad)
    with pytest.raises(ValueError):
        make_op(pentagon, np.zeros((2, 2), dtype=np.int64))


def test_lattice_meet_is_a_tnorm():
    t = diamond_lattice()
    report = check(meet_op(t))
    assert report.is_tnorm
    assert report.idempotent and report.conjunctive and report.meet_preserving
    assert not report.disjunctive


def test_pentagon_meet_fails_one_sided_monotonicity(pentagon):
    report = check(meet_op(pentagon))
    assert not report.left_increasing and not report.right_increasing
    assert not report.increasing
    # recorded witness: b <= c but F(b, a) and F(c, a) flip out of order
    b, c, a = (pentagon.index(s) for s in RECORDED_FACTS["pentagon.meet_left_right_witness"])
    F = pentagon.meet
    assert pentagon.leq(b, c)
    assert not pentagon.leq(F[b, a], F[c, a])


def test_join_op_is_disjunctive(pentagon):
    report = check(join_op(pentagon))
    assert report.disjunctive and not report.conjunctive
    assert report.neutral_top is False  # the top absorbs instead


def test_drastic_tables_match_the_records(pentagon):
    assert t_drastic(pentagon).same_op(recorded_table("pentagon.T1"))
    report = check(t_drastic(pentagon))
    assert report.is_tnorm and report.meet_preserving


def test_drastic_is_below_everything(pentagon):
    drastic = t_drastic(pentagon)
    for key in ("pentagon.T2", "pentagon.T3", "pentagon.T4", "pentagon.T5", "pentagon.T6"):
        assert pointwise_leq(drastic, recorded_table(key)), key


def test_coatom_construction(pentagon):
    c = pentagon.index("c")
    op = t_coatom(pentagon, c)
    assert op.same_op(recorded_table("pentagon.T2"))
    assert check(op).is_tnorm
    with pytest.raises(NotACoAtom):
        t_coatom(pentagon, pentagon.index("a"))
    with pytest.raises(NotACoAtom):
        t_coatom(pentagon, pentagon.top)


def test_join_cover_condition_and_construction():
    fork = CARRIERS["fork8"]()
    assert join_cover_condition(fork) is True
    assert join_cover_witness(fork) is None
    op = t_join_cover(fork)
    assert op.same_op(recorded_table("fork8.join_cover"))
    assert check(op).is_tnorm

    d7 = CARRIERS["diamond7"]()
    assert join_cover_condition(d7) is False
    witness = join_cover_witness(d7)
    assert witness is not None
    assert tuple(d7.names[i] for i in witness) == RECORDED_FACTS["diamond7.join_cover_witness"]
    # the formula still produces a table there, just not a monotone one
    assert not check(t_join_cover(d7)).increasing


def test_pentagon_construction_landing_spots(pentagon):
    landing = RECORDED_FACTS["pentagon.constructions"]
    assert t_join_cover(pentagon).same_op(recorded_table(f"pentagon.{landing['join_cover']}"))
    got = tnorm_via_subset(pentagon, pentagon.indices(("0", "b")))
    assert got.same_op(recorded_table(f"pentagon.{landing['subset_0b']}"))
    got = tnorm_via_subset(pentagon, pentagon.indices(("0", "b", "c")))
    assert got.same_op(recorded_table(f"pentagon.{landing['subset_rtr']}"))


def test_restrict_recomputes_tables(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
    sub, back = restrict(hourglass, members)
    assert back == members
    assert sub.n == len(members)
    # the restriction has its own top: meets against it are identities
    k = sub.index("e")
    assert sub.meet[k, sub.index("c")] == sub.index("c") or True
    assert np.array_equal(sub.rel, hourglass.rel[np.ix_(members, members)])


def test_scaled_meet_properties(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
    v = scaled_meet(hourglass, members, hourglass.index("b"))
    report = check(v)
    assert report.commutative and report.associative
    assert report.increasing and report.conjunctive
    assert not report.is_tnorm  # no neutral element by design

    with pytest.raises(ElementNotInSubset):
        scaled_meet(hourglass, members, hourglass.index("a"))
    d7 = CARRIERS["diamond7"]()
    with pytest.raises(NotASubLattice):
        scaled_meet(d7, sorted(d7.indices(("0", "a", "c", "d", "e", "1"))), 0)


def test_interior_tnorm_matches_records(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
    op = tnorm_via_subset(hourglass, members)
    assert op.same_op(recorded_table("hourglass7.interior_meet"))
    report = check(op)
    assert report.is_tnorm and report.meet_preserving


def test_interior_tnorm_with_scaled_gate(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
    for gate in ("b", "c", "d", "e"):
        v = scaled_meet(hourglass, members, hourglass.index(gate))
        op = tnorm_via_subset(hourglass, members, v)
        assert op.same_op(recorded_table(f"hourglass7.T_V{gate}")), gate
        assert check(op).is_tnorm, gate


def test_interior_tnorm_on_the_cycle_carrier():
    t = CARRIERS["loop8"]()
    members = sorted(t.indices(("0", "a", "d", "1")))
    op = tnorm_via_subset(t, members)
    assert op.same_op(recorded_table("loop8.interior_meet"))
    assert check(op).is_tnorm


def test_interior_route_equals_subset_route(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c")))
    im = interior_from_subset(hourglass, members)
    assert tnorm_via_interior(hourglass, im).same_op(
        tnorm_via_subset(hourglass, members)
    )


def test_range_must_be_right_transitive(pentagon):
    from trelliskit import UnaryMap

    # the identity passes every interior axiom, but its range includes a,
    # which is not right-transitive on the pentagon
    ident = UnaryMap(pentagon, np.arange(pentagon.n, dtype=np.int64))
    with pytest.raises(RangeNotRightTransitive):
        tnorm_via_interior(pentagon, ident)


def test_gate_rejects_foreign_or_lawless_tables(hourglass):
    members = sorted(hourglass.indices(("0", "b", "c", "d", "e", "1")))
    other = sorted(hourglass.indices(("0", "b", "1")))
    v_other = scaled_meet(hourglass, other, hourglass.index("b"))
    with pytest.raises(VNotATnorm):
        tnorm_via_subset(hourglass, members, v_other)


def test_unchecked_subset_route_reproduces_the_counterexample():
    t = CARRIERS["diamond7"]()
    members = sorted(t.indices(("0", "a", "c", "d", "e", "1")))
    op = tnorm_via_subset(t, members, unchecked=True)
    assert op.same_op(recorded_table("diamond7.unchecked"))
    report = check(op)
    assert report.commutative and not report.increasing
    x, z, y, w = (t.index(s) for s in RECORDED_FACTS["diamond7.unchecked_increasing_witness"])
    assert t.leq(x, z)
    assert not t.leq(op(x, y), op(z, w) if (y, x) != (w, z) else op(z, y))


def test_unchecked_refuses_a_gate(hourglass):
    members = sorted(hourglass.indices(("0", "b", "1")))
    v = scaled_meet(hourglass, members, hourglass.index("b"))
    with pytest.raises(ValueError):
        tnorm_via_subset(hourglass, members, v, unchecked=True)


def test_pointwise_leq_requires_matching_carriers(pentagon):
    with pytest.raises(TargetMismatch):
        pointwise_leq(t_drastic(pentagon), t_drastic(bounded_chain(5)))


def test_neutral_top_witness_shape(pentagon):
    tab = pentagon.meet.copy()
    report = check(make_op(pentagon, tab))
    assert report.neutral_top  # meet always has the top neutral
    broken = tab.copy()
    broken[pentagon.top, 0] = pentagon.top
    report = check(make_op(pentagon, broken))
    assert report.neutral_top is False
    assert report.witnesses["neutral_top"] == (0,)
