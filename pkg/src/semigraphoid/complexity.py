"""Representation complexity of semi-graphoids.

Three measures are supported, each the least number of generators that
reproduce a relation ``i``:

* ``sem``    -- generators closed under the semi-graphoid axioms;
* ``stab``   -- generators closed under the stable axioms (``i`` must be stable);
* ``strong`` -- a pair ``(C, D)`` with ``sem(C) | stab(D) == i``, counting both.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .core import Relation
from .dominance import O, S, maximal_elements
from .engine import MixedRepresentation, expansion, hybrid_closure
from .oracle import sem_closure_bruteforce, stab_closure_bruteforce, stable_part

DEFAULT_BUDGET = 10_000


class Mode(enum.Enum):
    SEM = "sem"
    STAB = "stab"
    STRONG = "strong"


@dataclass(frozen=True)
class ComplexityReport:
    com_sem_upper: int
    com_strong_upper: int
    com_sem_exact: int | None = None
    com_strong_exact: int | None = None
    budget_exhausted: bool = False

    def as_dict(self) -> dict:
        return {
            "comSemUpper": self.com_sem_upper,
            "comStrongUpper": self.com_strong_upper,
            "comSemExact": self.com_sem_exact,
            "comStrongExact": self.com_strong_exact,
            "budgetExhausted": self.budget_exhausted,
        }


class ExactComplexity(NamedTuple):
    value: int | None
    budget_exhausted: bool


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _strong_seed(i: Relation) -> MixedRepresentation:
    stable = stable_part(i)
    ms = maximal_elements(stable, S)
    mu = Relation(i.universe, (t for t in maximal_elements(i, O) if t not in stable))
    return MixedRepresentation(ms, mu, i.universe)


def complexity_upper_bounds(i: Relation | MixedRepresentation, max_vars: int | None = None) -> ComplexityReport:
    """Cheap upper bounds: the o-maximal statements, and the hybrid closure's size.

    ``i`` is either a semi-graphoid (the hybrid run is seeded with its stable
    part and the o-maximal remainder) or a mixed representation, which is
    closed and read off directly.
    """
    if isinstance(i, MixedRepresentation):
        out, _ = hybrid_closure(i)
        relation = expansion(out, max_vars=max_vars)
        return ComplexityReport(len(maximal_elements(relation, O)), len(out))
    i.universe.check_guard(max_vars)
    if not len(i):
        return ComplexityReport(0, 0)
    out, _ = hybrid_closure(_strong_seed(i))
    return ComplexityReport(len(maximal_elements(i, O)), len(out))


def _search(candidates, upper, budget, accept):
    """Smallest k < upper with an accepted k-subset; ``upper`` if none."""
    for k in range(1, upper):
        for combo in itertools.combinations(candidates, k):
            if not budget.spend():
                return None
            if accept(combo):
                return k
    return upper


def exact_complexity(i: Relation, mode: Mode | str, budget: int = DEFAULT_BUDGET,
                     max_vars: int | None = None) -> ExactComplexity:
    """Exhaustive minimum over generating sets, in order of increasing size.

    ``budget`` caps the number of closure evaluations; when it trips the
    result is ``ExactComplexity(None, True)``.  ``stab`` mode on a relation
    that is not a stable semi-graphoid has no generating set and returns
    ``ExactComplexity(None, False)``.
    """
    mode = Mode(mode)
    u = i.universe
    u.check_guard(max_vars)
    if not len(i):
        return ExactComplexity(0, False)
    tracker = _Budget(budget)
    candidates = i.sorted()

    if mode is Mode.SEM:
        upper = len(maximal_elements(i, O))
        value = _search(candidates, upper,
                        tracker, lambda d: sem_closure_bruteforce(Relation(u, d), max_vars) == i)
        return ExactComplexity(value, value is None)

    if mode is Mode.STAB:
        if stab_closure_bruteforce(i, max_vars) != i:
            return ExactComplexity(None, False)
        upper = len(maximal_elements(i, S))
        value = _search(candidates, upper,
                        tracker, lambda d: stab_closure_bruteforce(Relation(u, d), max_vars) == i)
        return ExactComplexity(value, value is None)

    # strong: stab(D) lies inside i, so every member of D is stable in i
    stable_candidates = stable_part(i).sorted()

    def generates(c, d):
        got = sem_closure_bruteforce(Relation(u, c), max_vars) if c else Relation(u)
        if d:
            got = got | stab_closure_bruteforce(Relation(u, d), max_vars)
        return got == i

    upper = len(maximal_elements(i, O))
    out, _ = hybrid_closure(_strong_seed(i))
    if len(out) < upper:
        if not tracker.spend():
            return ExactComplexity(None, True)
        if generates(out.mu.sorted(), out.ms.sorted()):
            upper = len(out)
    for k in range(1, upper):
        for d_size in range(k, -1, -1):
            for d in itertools.combinations(stable_candidates, d_size):
                for c in itertools.combinations(candidates, k - d_size):
                    if not tracker.spend():
                        return ExactComplexity(None, True)
                    if generates(c, d):
                        return ExactComplexity(k, False)
    return ExactComplexity(upper, False)


def complexity_report(i: Relation, exact: bool = False, budget: int = DEFAULT_BUDGET,
                      max_vars: int | None = None) -> ComplexityReport:
    bounds = complexity_upper_bounds(i, max_vars)
    if not exact:
        return bounds
    sem = exact_complexity(i, Mode.SEM, budget, max_vars)
    strong = exact_complexity(i, Mode.STRONG, budget, max_vars)
    return ComplexityReport(
        bounds.com_sem_upper,
        bounds.com_strong_upper,
        sem.value,
        strong.value,
        sem.budget_exhausted or strong.budget_exhausted,
    )
