"""Dominance orders, the contraction-style product operators, and expansion."""

from __future__ import annotations

import enum
from typing import Iterable

from . import _kernels
from .core import Flavor, Relation, Triplet


class DominanceKind(enum.Enum):
    O_DOMINANCE = "o"
    S_DOMINANCE = "s"


O = DominanceKind.O_DOMINANCE
S = DominanceKind.S_DOMINANCE


def _sides_fit(t: int, u: int, x: int, y: int) -> bool:
    return (t & ~x == 0 and u & ~y == 0) or (t & ~y == 0 and u & ~x == 0)


def o_dominates(v: Triplet, u: Triplet) -> bool:
    """True when ``u`` follows from ``v`` by symmetry, decomposition and weak union.

    With ``u = <T, U | W>`` and ``v = <X, Y | Z>`` this is
    ``T <= X, U <= Y, Z <= W <= XYZ`` for one of the two orientation pairings.
    """
    x, y, z = v.a, v.b, v.c
    w = u.c
    if z & ~w or w & ~(x | y | z):
        return False
    return _sides_fit(u.a, u.b, x, y)


def s_dominates(v: Triplet, u: Triplet) -> bool:
    """Like :func:`o_dominates` but with strong union: only ``Z <= W`` is required."""
    if v.c & ~u.c:
        return False
    return _sides_fit(u.a, u.b, v.a, v.b)


def dominates(v: Triplet, u: Triplet, kind: DominanceKind) -> bool:
    return o_dominates(v, u) if kind is O else s_dominates(v, u)


def star(u: Triplet, v: Triplet) -> Triplet | None:
    """Studeny's product of ``u = <A, B | C>`` and ``v = <I, J | K>``, or ``None``.

    Arguments are taken in the orientation given.
    """
    a, b, c = u.a, u.b, u.c
    i, j, k = v.a, v.b, v.c
    ijk = i | j | k
    if c & ~ijk or k & ~(a | b | c):
        return None
    first = a & i
    second = (j & ~c) | (b & ijk)
    if not first or not second:
        return None
    return Triplet(first, second, c | (a & k))


def diamond(u: Triplet, v: Triplet) -> Triplet | None:
    """Product of two stable statements; the result is tagged stable.

    Unlike :func:`star` there are no conditions on the conditioning sets.
    """
    a, b, c = u.a, u.b, u.c
    i, j, k = v.a, v.b, v.c
    first = a & i
    second = (j & ~c) | (b & ~j)
    if not first or not second:
        return None
    return Triplet(first, second, c | (k & ~b), Flavor.STABLE)


def oriented_products(op, u: Triplet, v: Triplet) -> list[Triplet]:
    """All defined products over the four orientation combinations of ``u`` and ``v``."""
    out = []
    for uo in u.orientations():
        for vo in v.orientations():
            p = op(uo, vo)
            if p is not None:
                out.append(p)
    return out


def maximal_triplets(items: Iterable[Triplet], kind: DominanceKind) -> list[Triplet]:
    """Members not dominated by any distinct member (duplicates collapse first)."""
    seen = {}
    for t in items:
        old = seen.get(t.key)
        if old is None or t.flavor > old.flavor:
            seen[t.key] = t
    pool = list(seen.values())
    test = o_dominates if kind is O else s_dominates
    return [u for u in pool if not any(v.key != u.key and test(v, u) for v in pool)]


def maximal_elements(s: Relation, kind: DominanceKind) -> Relation:
    return Relation(s.universe, maximal_triplets(s.sorted(), kind))


def expand(d: Relation, kind: DominanceKind, max_vars: int | None = None,
           backend: str | None = None) -> Relation:
    """Every triplet over the universe dominated (per ``kind``) by a member of ``d``."""
    u = d.universe
    u.check_guard(max_vars)
    if not len(d):
        return Relation(u)
    strong = kind is S
    member = _kernels.expand(u.n, [t.key for t in d.sorted()], strong, backend=backend)
    flavor = Flavor.STABLE if strong else Flavor.ORDINARY
    return Relation.from_keys(u, _kernels.decode_members(u.n, member), flavor)
