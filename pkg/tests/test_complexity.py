import random

import pytest

from semigraphoid import (
    MixedRepresentation,
    Mode,
    Relation,
    Universe,
    complexity_report,
    complexity_upper_bounds,
    exact_complexity,
    relation,
    sem_closure_bruteforce,
    stab_closure_bruteforce,
    stable_part,
)
from semigraphoid.engine import pre_expand_stable
from semigraphoid.sampling import instances


@pytest.fixture
def lifted(u5):
    return stab_closure_bruteforce(relation(u5, [("A", "B")]))


def test_upper_bounds(u3, lifted):
    r = complexity_upper_bounds(lifted)
    assert (r.com_sem_upper, r.com_strong_upper) == (8, 1)
    single = sem_closure_bruteforce(relation(u3, [("1", "23")]))
    r = complexity_upper_bounds(single)
    assert (r.com_sem_upper, r.com_strong_upper) == (1, 1)
    r = complexity_upper_bounds(Relation(u3))
    assert (r.com_sem_upper, r.com_strong_upper) == (0, 0)


def test_upper_bounds_from_mixed_representation(u5):
    rep = MixedRepresentation.build(u5, [u5.triplet(["A"], ["B"])])
    r = complexity_upper_bounds(rep)
    assert (r.com_sem_upper, r.com_strong_upper) == (8, 1)


def test_exact_examples(u3, lifted):
    single = sem_closure_bruteforce(relation(u3, [("1", "23")]))
    assert exact_complexity(single, Mode.SEM) == (1, False)
    assert exact_complexity(lifted, "sem") == (8, False)
    assert exact_complexity(lifted, Mode.STRONG) == (1, False)
    assert exact_complexity(lifted, Mode.STAB) == (1, False)
    assert exact_complexity(Relation(u3), Mode.SEM) == (0, False)


def test_stab_mode_on_unstable_relation(u3):
    i = sem_closure_bruteforce(relation(u3, [("1", "2")]))
    assert exact_complexity(i, Mode.STAB) == (None, False)


def test_budget_trips(lifted):
    value, exhausted = exact_complexity(lifted, Mode.SEM, budget=5)
    assert value is None and exhausted
    report = complexity_report(lifted, exact=True, budget=5)
    assert report.budget_exhausted and report.com_sem_exact is None


def test_report_dict_keys(lifted):
    d = complexity_report(lifted, exact=True).as_dict()
    assert d == {"comSemUpper": 8, "comStrongUpper": 1, "comSemExact": 8,
                 "comStrongExact": 1, "budgetExhausted": False}


def test_ordering_and_bounds_on_random_relations():
    for rep in instances(77, 40, n_choices=(3, 4), max_statements=3):
        i = sem_closure_bruteforce(pre_expand_stable(rep))
        r = complexity_report(i, exact=True, budget=50_000)
        assert not r.budget_exhausted
        assert r.com_strong_upper <= r.com_sem_upper
        assert r.com_sem_exact <= r.com_sem_upper
        assert r.com_strong_exact <= r.com_strong_upper
        assert r.com_strong_exact <= r.com_sem_exact
        trivial_only = all(t.is_trivially_stable(i.universe) for t in stable_part(i))
        if trivial_only:
            assert r.com_strong_exact == r.com_sem_exact
