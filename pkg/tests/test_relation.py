import numpy as np
import pytest

from trelliskit import (
    HasseDiagram,
    Psoset,
    co_atoms,
    down_set,
    hasse,
    is_cycle,
    is_pseudo_chain,
    maximal_cycles,
    reachable,
    restricted_reachable,
    up_set,
    validate_psoset,
)
from trelliskit.errors import DuplicateName, NotAntisymmetric, NotReflexive
from trelliskit.fixtures import CARRIERS, bounded_chain
from trelliskit.relation import transitive_closure


def chain_rel(n):
    return np.fromfunction(lambda i, j: i <= j, (n, n), dtype=int)


def test_validate_accepts_chain():
    p = validate_psoset(chain_rel(3), ("x", "y", "z"))
    assert p.n == 3
    assert p.bottom == 0 and p.top == 2
    assert p.leq(0, 2) and not p.leq(2, 0)
    assert p.is_transitive()


def test_validate_rejects_missing_reflexivity():
    rel = chain_rel(3)
    rel[1, 1] = False
    with pytest.raises(NotReflexive):
        validate_psoset(rel, ("x", "y", "z"))


def test_validate_rejects_mutual_pairs():
    rel = chain_rel(3)
    rel[2, 0] = True
    with pytest.raises(NotAntisymmetric) as info:
        validate_psoset(rel, ("x", "y", "z"))
    assert "x" in str(info.value) and "z" in str(info.value)


def test_validate_rejects_duplicate_names():
    with pytest.raises(DuplicateName):
        validate_psoset(chain_rel(2), ("x", "x"))


def test_singleton_is_fine():
    p = validate_psoset(np.ones((1, 1), dtype=bool), ("o",))
    assert p.bottom == p.top == 0


def test_name_lookup_round_trip():
    p = CARRIERS["pentagon"]()
    for k, name in enumerate(p.names):
        assert p.index(name) == k
    assert p.indices(("a", "c")) == frozenset({p.index("a"), p.index("c")})
    assert tuple(p.labels([0, 1])) == (p.names[0], p.names[1])


def test_transitive_closure_follows_paths():
    rel = np.eye(4, dtype=bool)
    rel[0, 1] = rel[1, 2] = rel[2, 3] = True
    closed = transitive_closure(rel)
    assert closed[0, 3] and closed[0, 2] and closed[1, 3]
    assert not closed[3, 0]


def test_pentagon_is_not_transitive():
    p = CARRIERS["pentagon"]().base
    a, b, c = p.index("a"), p.index("b"), p.index("c")
    assert p.leq(a, b) and p.leq(b, c) and not p.leq(a, c)
    assert not p.is_transitive()
    assert reachable(p, a, c)  # through b


def test_restricted_reachability_loses_the_intermediate():
    p = CARRIERS["pentagon"]().base
    a, b, c = p.index("a"), p.index("b"), p.index("c")
    assert restricted_reachable(p, [a, b, c], a, c)
    assert not restricted_reachable(p, [a, c], a, c)
    # with C = everything the two notions agree
    for x in range(p.n):
        for y in range(p.n):
            assert restricted_reachable(p, range(p.n), x, y) == reachable(p, x, y)


def test_pseudo_chain_recognition():
    chain = bounded_chain(4)
    assert is_pseudo_chain(chain.base, range(4))
    p = CARRIERS["pentagon"]()
    assert is_pseudo_chain(p, p.indices(("0", "a", "b")))
    # a relates to c only through b, so {a, c} alone is not a pseudo-chain
    assert not is_pseudo_chain(p, p.indices(("a", "c")))


def test_six_cycle_maximal_cycles():
    p = CARRIERS["six_cycle"]()
    cycles = maximal_cycles(p)
    assert [set(p.labels(c)) for c in cycles] == [{"d", "e", "f"}]
    assert is_cycle(p, cycles[0])
    assert not is_cycle(p, p.indices(("a", "b")))


def test_transitive_psosets_have_no_cycles():
    for k in range(2, 6):
        assert maximal_cycles(bounded_chain(k).base) == []


def test_up_down_sets_and_co_atoms():
    p = CARRIERS["pentagon"]()
    assert set(p.labels(down_set(p, p.index("b")))) == {"0", "a", "b"}
    assert set(p.labels(up_set(p, p.index("b")))) == {"b", "c", "1"}
    assert set(p.labels(co_atoms(p))) == {"c"}


def test_pentagon_hasse_matches_recorded_shape():
    p = CARRIERS["pentagon"]().base
    d = hasse(p)
    assert isinstance(d, HasseDiagram)
    covers = {(p.names[x], p.names[y]) for x, y in d.cover_edges}
    assert covers == {("0", "a"), ("a", "b"), ("b", "c"), ("c", "1")}
    dashed = {frozenset(p.labels(pair)) for pair in d.dashed_pairs}
    assert dashed == {frozenset({"a", "c"})}
    assert d.back_edges == frozenset()


def test_loop_hasse_has_directed_back_edge():
    p = CARRIERS["loop8"]().base
    d = hasse(p)
    named_back = {(p.names[x], p.names[y]) for x, y in d.back_edges}
    assert ("f", "b") in named_back


def test_chain_hasse_is_covers_only():
    t = bounded_chain(4)
    d = hasse(t.base)
    assert d.cover_edges == frozenset({(0, 1), (1, 2), (2, 3)})
    assert d.dashed_pairs == frozenset() and d.back_edges == frozenset()


def test_relation_is_frozen():
    p = CARRIERS["pentagon"]()
    with pytest.raises(ValueError):
        p.rel[0, 0] = False
