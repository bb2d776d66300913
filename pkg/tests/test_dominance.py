import pytest

from semigraphoid import (
    Flavor,
    Relation,
    Triplet,
    diamond,
    expand,
    maximal_elements,
    o_dominates,
    relation,
    s_dominates,
    sem_closure_bruteforce,
    stab_closure_bruteforce,
    star,
)
from semigraphoid.core import varset
from semigraphoid.dominance import O, S, oriented_products


def T(a, b, c=()):
    # 1-based variable lists
    return Triplet(varset(*(i - 1 for i in a)), varset(*(i - 1 for i in b)), varset(*(i - 1 for i in c)))


@pytest.mark.parametrize("v, u, o, s", [
    (T([1], [2, 3]), T([1], [2], [3]), True, True),
    (T([1], [2, 3]), T([3], [1]), True, True),
    (T([1], [2], [3]), T([1], [2], [3, 4]), False, True),
    (T([1], [2], [3]), T([1], [2]), False, False),
    (T([1], [2]), T([1], [2]), True, True),
])
def test_dominance_examples(v, u, o, s):
    assert o_dominates(v, u) is o
    assert s_dominates(v, u) is s


def test_star_examples():
    assert star(T([1], [2]), T([1], [3], [2])) == T([1], [2, 3])
    assert star(T([1], [2], [3]), T([1], [3])) is None
    u = T([1], [2])
    assert star(u, u) == u


def test_diamond_examples():
    got = diamond(T([1], [2]), T([1], [3], [2]))
    assert got == T([1], [2, 3]) and got.flavor is Flavor.STABLE
    assert diamond(T([1], [2]), T([3], [4])) is None
    assert diamond(T([1, 2], [3]), T([1], [4], [3])) == T([1], [3, 4])


def test_diamond_product_lies_in_stab_closure(u3):
    u, v = T([1], [2]), T([1], [3], [2])
    assert diamond(u, v) in stab_closure_bruteforce(Relation(u3, [u, v]))


def test_oriented_products_cover_symmetric_arguments():
    u, v = T([2], [1]), T([3], [1], [2])
    assert T([1], [2, 3]) in oriented_products(star, u, v)


def test_maximal_elements_examples(u3, u5):
    closed = sem_closure_bruteforce(relation(u3, [("1", "23")]))
    assert list(maximal_elements(closed, O)) == [T([1], [2, 3])]
    lifted = stab_closure_bruteforce(relation(u5, [("A", "B")]))
    assert len(maximal_elements(lifted, O)) == 8
    assert list(maximal_elements(lifted, S)) == [u5.triplet(["A"], ["B"])]
    assert len(maximal_elements(Relation(u3), O)) == 0


def test_expand_examples(u3, u5):
    gen = relation(u3, [("1", "23")])
    assert expand(gen, O) == sem_closure_bruteforce(gen)
    assert expand(gen, O).ordered_size() == 10
    expanded = expand(relation(u5, [("A", "B")]), S)
    assert expanded.ordered_size() == 16
    assert len(expand(Relation(u3), O)) == 0


def test_expand_uses_both_orientations(u3):
    r = Relation(u3, [Triplet(0b110, 0b001, 0)])
    assert u3.triplet(["1"], ["2"], ["3"]) in expand(r, O)
