import pytest

from semigraphoid import (
    Flavor,
    NotClosed,
    Relation,
    Triplet,
    Universe,
    UniverseTooLarge,
    is_ascending,
    is_semigraphoid,
    is_stable_semigraphoid,
    relation,
    sem_closure_bruteforce,
    stab_closure_bruteforce,
    stable_part,
)
from semigraphoid.oracle import unstable_part


def canon(u, rel):
    return sorted(u.format_triplet(t) for t in rel)


def test_empty_closures(u3):
    assert len(sem_closure_bruteforce(Relation(u3))) == 0
    assert len(stab_closure_bruteforce(Relation(u3))) == 0


def test_sem_closure_of_single_generator(u3):
    closed = sem_closure_bruteforce(relation(u3, [("1", "23")]))
    assert closed.ordered_size() == 10
    assert canon(u3, closed) == ["<1 ; 2 | 3>", "<1 ; 2,3>", "<1 ; 2>", "<1 ; 3 | 2>", "<1 ; 3>"]


def test_contraction_reaches_same_closure(u3):
    via_contraction = sem_closure_bruteforce(relation(u3, [("1", "2"), ("1", "3", "2")]))
    assert via_contraction == sem_closure_bruteforce(relation(u3, [("1", "23")]))


def test_stab_closure_single_stable(u5):
    closed = stab_closure_bruteforce(relation(u5, [("A", "B")]))
    assert len(closed) == 8 and closed.ordered_size() == 16
    conds = sorted("".join(u5.names_of(t.c)) for t in closed)
    assert conds == sorted(["", "C", "D", "E", "CD", "CE", "DE", "CDE"])
    assert all(t.flavor is Flavor.STABLE for t in closed)


def test_stab_closure_of_full_support_statement(u3):
    closed = stab_closure_bruteforce(relation(u3, [("1", "2", "3")]))
    assert closed.ordered_size() == 2


def test_guard():
    big = Universe.of_size(8)
    r = Relation(big, [Triplet(1, 2, 0)])
    with pytest.raises(UniverseTooLarge):
        sem_closure_bruteforce(r)
    assert len(sem_closure_bruteforce(r, max_vars=8)) == 1


def test_is_semigraphoid_witnesses(u3):
    ok, violations = is_semigraphoid([Triplet(1, 2, 0)], universe=u3)
    assert not ok
    first = violations[0]
    assert first.axiom == "A1" and first.missing.oriented == (2, 1, 0)

    t = Triplet(1, 0b110, 0)
    ok, violations = is_semigraphoid([t, Triplet(0b110, 1, 0)], universe=u3)
    assert not ok
    assert violations[0].axiom == "A2" and violations[0].missing.oriented in {(1, 2, 0), (2, 1, 0)}


def test_bare_iterable_needs_universe():
    with pytest.raises(TypeError):
        is_semigraphoid([Triplet(1, 2, 0)])


def test_stable_checker(u3):
    closed = sem_closure_bruteforce(relation(u3, [("1", "2")]))
    assert is_semigraphoid(closed)[0]
    ok, violations = is_stable_semigraphoid(closed)
    assert not ok
    assert violations[0].axiom == "S5"
    assert violations[0].missing == u3.triplet(["1"], ["2"], ["3"])
    assert is_stable_semigraphoid(Relation(u3))[0]


def test_stable_part_examples(u3, u5):
    i = sem_closure_bruteforce(relation(u3, [("1", "2")]))
    assert len(stable_part(i)) == 0
    assert unstable_part(i) == i

    i = sem_closure_bruteforce(relation(u3, [("1", "23")]))
    assert stable_part(i) == i and is_ascending(i)

    i = stab_closure_bruteforce(relation(u5, [("A", "B")]))
    assert stable_part(i) == i


def test_stable_part_rejects_non_semigraphoid(u3):
    with pytest.raises(NotClosed) as excinfo:
        stable_part(relation(u3, [("1", "23")]))
    assert excinfo.value.violations


@pytest.mark.parametrize("n", [3, 4, 5])
def test_idempotent_monotone_and_nested(n):
    import random

    from semigraphoid.sampling import random_relation

    rng = random.Random(n)
    u = Universe.of_size(n)
    for _ in range(20):
        m = random_relation(rng, u, rng.randint(1, 3))
        bigger = m | random_relation(rng, u, 1)
        sem, stab = sem_closure_bruteforce(m), stab_closure_bruteforce(m)
        assert sem_closure_bruteforce(sem) == sem
        assert stab_closure_bruteforce(stab) == stab
        assert sem <= sem_closure_bruteforce(bigger)
        assert stab <= stab_closure_bruteforce(bigger)
        assert sem <= stab
        assert is_semigraphoid(sem)[0] and is_stable_semigraphoid(stab)[0]
