from agq.forbidden import (
    INF,
    LengthOrInf,
    delta_forbidden_sup,
    forbidden_cycles,
    is_down_relational,
    is_relational_vertex,
    is_up_relational,
    relation_digraph,
    sup_forbidden_from_arrow,
    sup_forbidden_from_vertex,
    zero_length_forbidden,
)
from agq.strings import DirectedString
from agq.generator import GeneratorParams, random_ag_pair


def test_relation_digraph(a3r, cyc2, fig1):
    assert relation_digraph(a3r).edges == (("a", "b"),)
    assert set(relation_digraph(cyc2).edges) == {("a", "b"), ("b", "a")}
    assert len(relation_digraph(fig1).edges) == 11
    assert forbidden_cycles(fig1)[0] == []


def test_sup_from_arrow_fig1(fig1):
    value, walk = sup_forbidden_from_arrow(fig1, "a_1_2")
    assert value == LengthOrInf.finite(4)
    assert walk.stem == ("a_1_2", "a_2_3", "a_3_4", "a_4_5")
    assert walk.verify(fig1)


def test_sup_from_arrow_cycle(cyc2):
    value, walk = sup_forbidden_from_arrow(cyc2, "a")
    assert value == INF
    assert walk.is_lasso
    assert walk.stem == ()
    assert tuple(sorted(walk.cycle)) == ("a", "b")
    assert walk.verify(cyc2)


def test_sup_from_arrow_vacuous(a2):
    value, walk = sup_forbidden_from_arrow(a2, "a")
    assert value == LengthOrInf.finite(1)
    assert walk.stem == ("a",)


def test_sup_from_arrow_at_least_one_on_corpus():
    for seed in range(1, 16):
        pair, _ = random_ag_pair(GeneratorParams(seed=seed))
        for a in pair.quiver.arrows:
            value, walk = sup_forbidden_from_arrow(pair, a.name)
            assert value >= LengthOrInf.finite(1)
            assert walk.verify(pair)
            if value.is_finite:
                assert len(walk.stem) == value.value


def test_sup_from_vertex(fig1, cyc2):
    assert sup_forbidden_from_vertex(fig1, "1")[0] == LengthOrInf.finite(4)
    assert sup_forbidden_from_vertex(fig1, "5")[0] == LengthOrInf.finite(0)
    assert sup_forbidden_from_vertex(cyc2, "1")[0] == INF


def test_sup_matches_bfs_brute_force():
    # level-set BFS on last arrows of forbidden paths; a path longer than
    # the arrow count repeats an arrow, i.e. reaches a digraph cycle
    for seed in range(1, 21):
        pair, _ = random_ag_pair(GeneratorParams(seed=seed, max_vertices=5, max_arrows=8))
        bound = len(pair.quiver.arrows) + 1
        for v in pair.quiver.vertices:
            frontier = {a.name for a in pair.quiver.arrows
                        if pair.arrow(a.name).source == v}
            best, length, overflow = (1 if frontier else 0), 1, False
            while frontier:
                if length > bound:
                    overflow = True
                    break
                best = length
                frontier = {b.name for a in frontier for b in pair.quiver.arrows
                            if (a, b.name) in pair.relations}
                length += 1
            value = sup_forbidden_from_vertex(pair, v)[0]
            if overflow:
                assert value == INF
            else:
                assert value == LengthOrInf.finite(best)


def test_zero_length_forbidden(a3r, a2, fig1):
    assert zero_length_forbidden(a3r, "2")
    assert zero_length_forbidden(a2, "1")
    assert not zero_length_forbidden(fig1, "1")


def test_relational_predicates(fig1, a2):
    assert is_down_relational(fig1, "a_1_2")
    assert not is_down_relational(fig1, "a_1_2R")
    assert is_up_relational(fig1, "a_2R_3R")
    assert is_relational_vertex(fig1, "2")
    assert not is_down_relational(a2, "a")


def test_delta_forbidden_fig1(fig1):
    value, walk = delta_forbidden_sup(fig1, DirectedString.of(("a_1_2",)))
    assert value == LengthOrInf.finite(2)
    assert walk.stem in {("a_1_2L", "a_2L_3L"), ("b_1_2R", "a_2R_3R")}


def test_delta_forbidden_gate(gate):
    value, walk = delta_forbidden_sup(gate, DirectedString.of(("a", "b")))
    assert value == LengthOrInf.finite(0)
    assert walk is None


def test_delta_forbidden_trivial(a2):
    assert delta_forbidden_sup(a2, DirectedString.of(("a",)))[0] == LengthOrInf.finite(0)


def test_forbidden_cycles(cyc2, fig1, loop_rel):
    assert forbidden_cycles(cyc2)[0] == [("a", "b")]
    assert forbidden_cycles(fig1) == ([], False)
    assert forbidden_cycles(loop_rel)[0] == [("x",)]


def test_forbidden_cycles_match_infinity_on_corpus():
    for seed in range(1, 21):
        pair, _ = random_ag_pair(GeneratorParams(seed=seed))
        cycles, _trunc = forbidden_cycles(pair)
        overall = max((sup_forbidden_from_vertex(pair, v)[0] for v in pair.quiver.vertices),
                      default=LengthOrInf.finite(0))
        assert bool(cycles) == (not overall.is_finite)
        for cyc in cycles:
            seq = cyc + cyc[:1]
            assert all((x, y) in pair.relations for x, y in zip(seq, seq[1:]))


def test_length_ordering():
    assert LengthOrInf.finite(3) < INF
    assert LengthOrInf.finite(2) < LengthOrInf.finite(3)
    assert max(LengthOrInf.finite(5), INF) == INF
    assert INF.plus(1) == INF
    assert LengthOrInf.finite(1).plus(2) == LengthOrInf.finite(3)


def test_forbidden_cycles_truncation_keeps_representatives():
    from conftest import make_pair
    pair = make_pair(["1", "2", "3", "4"],
                     [("a", "1", "2"), ("b", "2", "1"), ("c", "3", "4"), ("d", "4", "3")],
                     [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")])
    full, trunc = forbidden_cycles(pair)
    assert full == [("a", "b"), ("c", "d")] and not trunc
    capped, trunc = forbidden_cycles(pair, cap=1)
    assert trunc
    assert {cyc[0] for cyc in capped} == {"a", "c"}  # one per component
