"""Brute-force ground truth: axiom fixpoints, axiom checkers, stable parts.

The closures run on the array kernels in :mod:`semigraphoid._kernels`. The
checkers are written independently, straight from the axiom statements, so
that each route can be used to audit the other.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from . import _kernels
from .core import Flavor, Relation, Triplet, Universe, bits, subsets
from .errors import NotClosed

Key = tuple[int, int, int]


@dataclass(frozen=True)
class Violation:
    """A missing consequence: ``axiom`` applied to ``premises`` yields ``missing``."""

    axiom: str
    premises: tuple[Triplet, ...]
    missing: Triplet


def _closure(m: Relation, strong_union: bool, max_vars, backend) -> Relation:
    u = m.universe
    u.check_guard(max_vars)
    if not len(m):
        return Relation(u)
    seeds = _kernels.encode_many(u.n, [t.oriented for t in m.ordered()])
    member = _kernels.closure(u.n, seeds, strong_union=strong_union, backend=backend)
    keys = _kernels.decode_members(u.n, member)
    if strong_union:
        return Relation.from_keys(u, keys, Flavor.STABLE)
    # keep the caller's flavor on the generators, everything derived is ordinary
    return Relation(u, [*(Triplet(*k) for k in keys), *m.sorted()])


def sem_closure_bruteforce(m: Relation, max_vars: int | None = None, backend: str | None = None) -> Relation:
    """Smallest superset of ``m`` closed under symmetry, decomposition, weak union and contraction."""
    return _closure(m, False, max_vars, backend)


def stab_closure_bruteforce(m: Relation, max_vars: int | None = None, backend: str | None = None) -> Relation:
    """Smallest superset of ``m`` closed under the stable axioms (strong union added)."""
    return _closure(m, True, max_vars, backend)


def _oriented_keys(i) -> set[Key]:
    if isinstance(i, Relation):
        return {t.oriented for t in i.ordered()}
    return {t.oriented for t in i}


def _violations(keys: set[Key], full: int, strong: bool, limit: int | None):
    found: list[Violation] = []

    def missing(axiom, premises, target):
        if target in keys:
            return False
        found.append(Violation(axiom, tuple(Triplet(*p) for p in premises), Triplet(*target)))
        return limit is not None and len(found) >= limit

    order = sorted(keys, key=lambda k: (tuple(bits(k[0])), tuple(bits(k[1])), tuple(bits(k[2]))))
    for x, y, z in order:
        if missing("A1", [(x, y, z)], (y, x, z)):
            return found
    for x, y, z in order:
        for part in subsets(y, proper=True, nonempty=True):
            if missing("A2", [(x, y, z)], (x, part, z)):
                return found
    for x, y, z in order:
        for part in subsets(y, proper=True, nonempty=True):
            if missing("A3", [(x, y, z)], (x, part, z | (y & ~part))):
                return found
    by_first_and_cond = defaultdict(list)
    for x, w, zz in order:
        by_first_and_cond[x, zz].append(w)
    for x, y, z in order:
        for w in by_first_and_cond.get((x, y | z), ()):
            if missing("A4", [(x, y, z), (x, w, y | z)], (x, y | w, z)):
                return found
    if strong:
        for x, y, z in order:
            for e in bits(full & ~(x | y | z)):
                if missing("S5", [(x, y, z)], (x, y, z | (1 << e))):
                    return found
    return found


def _check(i, universe: Universe | None, strong: bool, limit: int | None):
    if universe is None:
        if not isinstance(i, Relation):
            raise TypeError("a universe is required when checking a bare collection of triplets")
        universe = i.universe
    violations = _violations(_oriented_keys(i), universe.full, strong, limit)
    return not violations, violations


def is_semigraphoid(i: Relation | Iterable[Triplet], universe: Universe | None = None,
                    limit: int | None = 16) -> tuple[bool, list[Violation]]:
    """Check closure under A1-A4.

    ``i`` may be a :class:`Relation` (symmetric by construction) or any
    collection of oriented triplets, in which case symmetry is checked too.
    Returns ``(ok, violations)`` with at most ``limit`` witnesses.
    """
    return _check(i, universe, False, limit)


def is_stable_semigraphoid(i: Relation | Iterable[Triplet], universe: Universe | None = None,
                           limit: int | None = 16) -> tuple[bool, list[Violation]]:
    """Check closure under S1-S5 (the semi-graphoid axioms plus strong union)."""
    return _check(i, universe, True, limit)


def _stable_keys(i: Relation) -> list[Key]:
    full = i.universe.full
    present = i.keys()
    out = []
    for t in i.sorted():
        x, y, z = t.key
        rest = full & ~(x | y | z)
        if all((x, y, z | extra) in present for extra in subsets(rest)):
            out.append(t.key)
    return out


def stable_part(i: Relation, check: bool = True) -> Relation:
    """Statements of the semi-graphoid ``i`` that survive every enlargement of their conditioning set.

    Statements using every variable are trivially stable and always included.
    Raises :class:`NotClosed` if ``i`` is not a semi-graphoid.
    """
    if check:
        ok, violations = is_semigraphoid(i)
        if not ok:
            raise NotClosed("stable part is only defined for semi-graphoids", violations)
    return Relation.from_keys(i.universe, _stable_keys(i), Flavor.STABLE)


def unstable_part(i: Relation, check: bool = True) -> Relation:
    return i - stable_part(i, check=check)


def is_ascending(i: Relation, check: bool = True) -> bool:
    """True when every statement of the semi-graphoid ``i`` is stable."""
    return len(stable_part(i, check=check)) == len(i)
