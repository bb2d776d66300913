import random

import pytest

from semigraphoid import (
    Flavor,
    MixedRepresentation,
    Relation,
    Universe,
    expansion,
    hybrid_closure,
    relation,
    sem_closure_bruteforce,
    step3a_products,
    step3b_products,
    step4_promote,
    studeny_closure,
)
from semigraphoid.dominance import O, S, maximal_triplets, o_dominates, s_dominates
from semigraphoid.engine import pre_expand_stable, step3a_contract, step3b_contract
from semigraphoid.sampling import instances, random_triplet


def names(u, rel):
    return sorted(u.format_triplet(t) for t in rel)


def test_studeny_examples(u3):
    m = relation(u3, [("1", "2"), ("1", "3", "2")])
    assert names(u3, studeny_closure(m)) == ["<1 ; 2,3>"]
    single = relation(u3, [("1", "2", "3")])
    assert studeny_closure(single) == single


def test_hybrid_mixed_example_raw_fixpoint(u3):
    rep = MixedRepresentation(relation(u3, [("1", "2")], Flavor.STABLE), relation(u3, [("1", "3", "2")]), u3)
    out, report = hybrid_closure(rep, compact=False)
    assert names(u3, out.ms) == ["<1 ; 2>"]
    assert names(u3, out.mu) == ["<1 ; 2,3>"]
    assert report.iterations >= 1


def test_hybrid_mixed_example_compacted(u3):
    rep = MixedRepresentation(relation(u3, [("1", "2")], Flavor.STABLE), relation(u3, [("1", "3", "2")]), u3)
    raw, _ = hybrid_closure(rep, compact=False)
    out, _ = hybrid_closure(rep)
    # the stable statement is fully o-covered by the ordinary one
    assert len(out.ms) == 0 and names(u3, out.mu) == ["<1 ; 2,3>"]
    assert expansion(out) == expansion(raw) == sem_closure_bruteforce(pre_expand_stable(rep))


def test_hybrid_step4_example(u6, step4_input):
    out, report = hybrid_closure(MixedRepresentation(step4_input, Relation(u6), u6), step4=True)
    assert names(u6, out.ms) == ["<A ; B | C>", "<A ; B | E>"]
    assert len(out.mu) == 0 and report.step4_enabled


def test_hybrid_with_empty_stable_matches_studeny():
    for rep in instances(5, 60):
        m = pre_expand_stable(rep)
        out, _ = hybrid_closure(MixedRepresentation(Relation(rep.universe), m, rep.universe))
        assert out.mu == studeny_closure(m) and len(out.ms) == 0


def test_hybrid_invariants_hold():
    for rep in instances(9, 80):
        out, _ = hybrid_closure(rep)
        ms, mu = out.ms.sorted(), out.mu.sorted()
        assert all(t.flavor is Flavor.STABLE for t in ms)
        assert all(t.flavor is Flavor.ORDINARY for t in mu)
        for t in ms + mu:
            assert not any(w != t and s_dominates(w, t) for w in ms)
        for t in mu:
            assert not any(w != t and o_dominates(w, t) for w in ms + mu)


def test_max_iterations_guard(u6, step4_input):
    with pytest.raises(RuntimeError):
        hybrid_closure(MixedRepresentation(step4_input, relation(u6, [("A", "C", "D")]), u6), max_iterations=0)


def test_step3a_example():
    u = Universe.of_size(4)
    ordinary = u.triplet(["1"], ["2"], ["3"])
    stable = u.triplet(["1", "3"], ["4"], flavor=Flavor.STABLE)
    got = step3a_products(ordinary, stable, u)
    assert names(u, got) == ["<1 ; 2,4 | 3>", "<1 ; 4 | 3>"]


def test_step3a_inapplicable_when_k_escapes():
    u = Universe.of_size(4)
    ordinary = u.triplet(["1"], ["2"])
    stable = u.triplet(["1"], ["2"], ["4"], flavor=Flavor.STABLE)
    assert step3a_products(ordinary, stable, u) == set()


def test_step3b_examples(u3):
    stable = u3.triplet(["1"], ["2"], flavor=Flavor.STABLE)
    ordinary = u3.triplet(["1"], ["3"], ["2"])
    assert names(u3, maximal_triplets(step3b_products(stable, ordinary, u3), O)) == ["<1 ; 2,3>"]

    u4 = Universe.of_size(4)
    got = step3b_products(u4.triplet(["1", "2"], ["3"], flavor=Flavor.STABLE), u4.triplet(["1"], ["4"], ["3"]), u4)
    assert u4.triplet(["1"], ["3", "4"]) in got


def test_step3b_inapplicable_when_c_escapes():
    u = Universe.of_size(4)
    stable = u.triplet(["1"], ["2"], ["4"], flavor=Flavor.STABLE)
    ordinary = u.triplet(["1"], ["3"], ["2"])
    assert step3b_products(stable, ordinary, u) == set()


def test_step3_outputs_are_sound():
    rng = random.Random(3)
    u = Universe.of_size(4)
    for _ in range(200):
        a, b = random_triplet(rng, 4), random_triplet(rng, 4, Flavor.STABLE)
        truth = sem_closure_bruteforce(pre_expand_stable(MixedRepresentation.build(u, [b], [a])))
        for uo in a.orientations():
            for vo in b.orientations():
                assert all(p in truth for p in step3a_products(uo, vo, u))
                assert all(p in truth for p in step3b_products(vo, uo, u))


def test_step3_move_families_match_contract_small():
    rng = random.Random(17)
    for _ in range(150):
        n = rng.choice((3, 4, 5))
        u = Universe.of_size(n)
        x, y = random_triplet(rng, n), random_triplet(rng, n)
        for xo in x.orientations():
            for yo in y.orientations():
                assert (set(maximal_triplets(step3a_products(xo, yo, u), O))
                        == set(maximal_triplets(step3a_contract(xo, yo, u), O)))
                assert (set(maximal_triplets(step3b_products(xo, yo, u), O))
                        == set(maximal_triplets(step3b_contract(xo, yo, u), O)))


def test_step4_examples(u6, step4_input):
    assert names(u6, step4_promote(step4_input)) == ["<A ; B | C>", "<A ; B | E>"]
    reduced = relation(u6, [("A", "B", "C"), ("A", "B", "E")], Flavor.STABLE)
    assert step4_promote(reduced) == reduced
    single = relation(u6, [("A", "B")], Flavor.STABLE)
    assert step4_promote(single) == single


def test_step4_is_a_monotone_extension():
    for rep in instances(21, 60, n_choices=(3, 4)):
        off, _ = hybrid_closure(rep)
        on, _ = hybrid_closure(rep, step4=True)
        assert expansion(off) <= expansion(on)


def test_widening_universe_keeps_stable_generator():
    u = Universe(list("ABCDE"))
    rep = MixedRepresentation.build(u, [u.triplet(["A"], ["B"])])
    out, _ = hybrid_closure(rep)
    assert names(u, out.ms) == ["<A ; B>"] and len(out.mu) == 0
    assert len(maximal_triplets(expansion(out).sorted(), S)) == 1
