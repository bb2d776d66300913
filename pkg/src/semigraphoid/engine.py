"""Compact-representation closure algorithms.

``studeny_closure`` keeps a set of o-dominant statements closed under the
star product.  ``hybrid_closure`` additionally carries stable statements,
which stand for every enlargement of their conditioning set, combines them
with the diamond product, and reconstructs the o-dominant statements they
hide whenever those are needed in a star product with an ordinary one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Flavor, Relation, Triplet, Universe, bits, subsets
from .dominance import O, S, diamond, expand, maximal_triplets, o_dominates, s_dominates, star
from .oracle import stab_closure_bruteforce


@dataclass(frozen=True)
class MixedRepresentation:
    """Stable (s-dominant) and ordinary (o-dominant) generators over one universe."""

    ms: Relation
    mu: Relation
    universe: Universe

    @classmethod
    def build(cls, universe: Universe, stable=(), ordinary=()) -> MixedRepresentation:
        return cls(
            Relation(universe, (t.with_flavor(Flavor.STABLE) for t in stable)),
            Relation(universe, (t.with_flavor(Flavor.ORDINARY) for t in ordinary)),
            universe,
        )

    def __len__(self) -> int:
        return len(self.ms) + len(self.mu)


@dataclass(frozen=True)
class ClosureReport:
    iterations: int
    card_ms: int
    card_mu: int
    oracle_checked: bool = False
    step4_enabled: bool = False
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "cardMS": self.card_ms,
            "cardMU": self.card_mu,
            "oracleChecked": self.oracle_checked,
            "step4Enabled": self.step4_enabled,
            "elapsedMs": round(self.elapsed * 1000.0, 3),
        }


def _all_orientations(pool):
    return [o for t in pool for o in t.orientations()]


def _star_pairs(left, right):
    out = []
    for u in _all_orientations(left):
        for v in _all_orientations(right):
            p = star(u, v)
            if p is not None:
                out.append(p)
    return out


def studeny_closure(m: Relation) -> Relation:
    return _studeny(m)[0]


def _studeny(m: Relation) -> tuple[Relation, int]:
    current = {t.key: t.with_flavor(Flavor.ORDINARY) for t in maximal_triplets(m.sorted(), O)}
    iterations = 0
    while True:
        iterations += 1
        pool = list(current.values())
        candidates = pool + _star_pairs(pool, pool)
        nxt = {t.key: t for t in maximal_triplets(candidates, O)}
        if nxt.keys() == current.keys():
            return Relation(m.universe, nxt.values()), iterations
        current = nxt


# ---------------------------------------------------------------------------
# step 3 reconstructions


def step3a_products(u: Triplet, v: Triplet, universe: Universe) -> set[Triplet]:
    """Star products of ordinary ``u`` with the o-dominant statements hidden under stable ``v``.

    Starts from the smallest admissible enlargement ``K0`` of ``v``'s
    conditioning set and combines the single-variable moves: remove a
    variable of ``I`` or ``J`` outside ``C``; add a variable of ``A`` or ``B``
    that ``v`` does not mention.
    """
    a, b, c = u.oriented
    i, j, k = v.oriented
    if k & ~(a | b | c):
        return set()
    ijk = i | j | k
    k0 = k | (c & ~ijk)
    free_i = i & ~c
    free_j = j & ~c
    extend = (a | b) & ~ijk & ~c
    out = set()
    for drop_i in subsets(free_i):
        ii = i & ~drop_i
        if not ii:
            continue
        for drop_j in subsets(free_j):
            jj = j & ~drop_j
            if not jj:
                continue
            for add in subsets(extend):
                p = star(u, Triplet(ii, jj, k0 | add))
                if p is not None:
                    out.add(p)
    return out


def step3b_products(u: Triplet, v: Triplet, universe: Universe) -> set[Triplet]:
    """Star products of the o-dominant statements hidden under stable ``u`` with ordinary ``v``.

    Base conditioning set ``C0 = C | (K \\ ABC)``; moves remove variables of
    ``A`` or ``B`` outside ``K`` and add variables of ``I`` unused by ``u``.
    """
    a, b, c = u.oriented
    i, j, k = v.oriented
    ijk = i | j | k
    if c & ~ijk:
        return set()
    d = universe.full & ~(a | b | c)
    c0 = c | (k & d)
    free_a = a & ~k
    free_b = b & ~k
    extend = d & i
    out = set()
    for drop_a in subsets(free_a):
        aa = a & ~drop_a
        if not aa:
            continue
        for drop_b in subsets(free_b):
            bb = b & ~drop_b
            if not bb:
                continue
            for add in subsets(extend):
                p = star(Triplet(aa, bb, c0 | add), v)
                if p is not None:
                    out.add(p)
    return out


def _s_dominated_variants(t: Triplet, universe: Universe):
    """Every valid triplet s-dominated by ``t`` in ``t``'s own orientation."""
    x, y, z = t.oriented
    rest = universe.full & ~(x | y | z)
    # each variable of x (or y) stays, moves to the conditioning set, or leaves
    for xx in subsets(x, nonempty=True):
        for x_to_cond in subsets(x & ~xx):
            for yy in subsets(y, nonempty=True):
                for y_to_cond in subsets(y & ~yy):
                    for extra in subsets(rest):
                        yield Triplet(xx, yy, z | x_to_cond | y_to_cond | extra)


def step3a_contract(u: Triplet, v: Triplet, universe: Universe) -> set[Triplet]:
    """Brute-force reference for :func:`step3a_products`: every defined ``u * v'`` with ``v'`` under ``v``."""
    out = set()
    for vv in _s_dominated_variants(v, universe):
        p = star(u, vv)
        if p is not None:
            out.add(p)
    return out


def step3b_contract(u: Triplet, v: Triplet, universe: Universe) -> set[Triplet]:
    """Brute-force reference for :func:`step3b_products`."""
    out = set()
    for uu in _s_dominated_variants(u, universe):
        p = star(uu, v)
        if p is not None:
            out.add(p)
    return out


# ---------------------------------------------------------------------------
# step 4


def _covered(t: Triplet, pool) -> bool:
    return any(s_dominates(w, t) for w in pool)


def step4_promote(ms: Relation, universe: Universe | None = None) -> Relation:
    """Promote ``<A, B | C \\ {d}>`` when all its one-variable conditioning extensions are covered.

    Runs to a fixpoint and returns the s-maximal members.  This rule is not
    a consequence of the stable axioms; it is only applied on request.
    """
    universe = ms.universe if universe is None else universe
    pool = [t.with_flavor(Flavor.STABLE) for t in ms.sorted()]
    return Relation(universe, _promote(pool, universe.full))


def _promote(pool: list[Triplet], full: int) -> list[Triplet]:
    # candidates come from the s-maximal members only; dominated statements
    # would admit further promotions than the explicit generators justify
    pool = maximal_triplets(pool, S)
    changed = True
    while changed:
        changed = False
        pool = maximal_triplets(pool, S)
        for t in sorted(pool, key=Triplet.sort_key):
            a, b, c = t.key
            for d in bits(c):
                smaller = c & ~(1 << d)
                cand = Triplet(a, b, smaller, Flavor.STABLE)
                if _covered(cand, pool):
                    continue
                others = full & ~(a | b | smaller)
                if all(_covered(Triplet(a, b, smaller | (1 << e)), pool) for e in bits(others)):
                    pool.append(cand)
                    changed = True
    return maximal_triplets(pool, S)


# ---------------------------------------------------------------------------
# main loop


def _prune(ms: dict, mu: dict) -> tuple[dict, dict]:
    """Steps 5a and 5b, after merging statements present in both sets into ``ms``.

    Dominance tests run against the pre-pruning sets; both orders are partial
    orders on canonical statements, so every removed statement stays covered
    by a survivor.
    """
    for key in ms.keys() & mu.keys():
        del mu[key]
    stable = list(ms.values())
    both = stable + list(mu.values())
    keep_ms = {k: t for k, t in ms.items()
               if not any(w.key != k and s_dominates(w, t) for w in stable)}
    keep_mu = {k: t for k, t in mu.items()
               if not any(w.key != k and o_dominates(w, t) for w in both)
               and not any(s_dominates(w, t) for w in stable)}
    return keep_ms, keep_mu


def _compact(ms: dict, mu: dict, universe: Universe) -> dict:
    """Drop the parts of stable statements that ordinary ones already cover.

    A stable statement o-dominated by an ordinary one is replaced by the
    s-maximal statements of its s-expansion not o-dominated by ``mu``; the
    expanded relation is unchanged and every surviving stable statement is
    then o-maximal in it.
    """
    ordinary = list(mu.values())
    pool = []
    for t in ms.values():
        if not any(o_dominates(w, t) for w in ordinary):
            pool.append(t)
            continue
        uncovered = [v for v in _s_dominated_variants(t, universe)
                     if not any(o_dominates(w, v) for w in ordinary)]
        pool.extend(v.with_flavor(Flavor.STABLE) for v in maximal_triplets(uncovered, S))
    return {t.key: t.canonical() for t in maximal_triplets(pool, S)}


def hybrid_closure(rep: MixedRepresentation, step4: bool = False,
                   max_iterations: int | None = None, compact: bool = True) -> tuple[MixedRepresentation, ClosureReport]:
    """Close stable and ordinary generators into a compact mixed representation.

    Returns the fixpoint and a :class:`ClosureReport`.  With ``step4`` enabled
    the promotion rule of :func:`step4_promote` runs in every iteration.
    ``compact=False`` skips the final pass that trims stable statements
    already covered by ordinary ones, leaving the raw loop fixpoint.
    """
    started = time.perf_counter()
    universe = rep.universe
    full = universe.full
    ms = {t.key: t.with_flavor(Flavor.STABLE) for t in rep.ms.sorted()}
    mu = {t.key: t.with_flavor(Flavor.ORDINARY) for t in rep.mu.sorted()}
    ms, mu = _prune(ms, mu)
    iterations = 0
    while True:
        iterations += 1
        if max_iterations is not None and iterations > max_iterations:
            raise RuntimeError(f"hybrid closure did not converge in {max_iterations} iterations")
        stable = list(ms.values())
        ordinary = list(mu.values())
        new_ms = dict(ms)
        new_mu = dict(mu)

        def add(target, t, flavor):
            if t.key not in target:
                target[t.key] = t.canonical().with_flavor(flavor)

        for p in _star_pairs(ordinary, ordinary):
            add(new_mu, p, Flavor.ORDINARY)
        for u in _all_orientations(stable):
            for v in _all_orientations(stable):
                p = diamond(u, v)
                if p is not None:
                    add(new_ms, p, Flavor.STABLE)
        for u in _all_orientations(ordinary):
            for v in _all_orientations(stable):
                for p in step3a_products(u, v, universe):
                    add(new_mu, p, Flavor.ORDINARY)
        for u in _all_orientations(stable):
            for v in _all_orientations(ordinary):
                for p in step3b_products(u, v, universe):
                    add(new_mu, p, Flavor.ORDINARY)
        if step4:
            new_ms = {t.key: t for t in _promote(list(new_ms.values()), full)}
        new_ms, new_mu = _prune(new_ms, new_mu)
        if new_ms.keys() == ms.keys() and new_mu.keys() == mu.keys():
            break
        ms, mu = new_ms, new_mu

    if compact:
        ms = _compact(ms, mu, universe)
    result = MixedRepresentation(Relation(universe, ms.values()), Relation(universe, mu.values()), universe)
    report = ClosureReport(
        iterations=iterations,
        card_ms=len(result.ms),
        card_mu=len(result.mu),
        step4_enabled=step4,
        elapsed=time.perf_counter() - started,
    )
    return result, report


def studeny_report(m: Relation) -> tuple[Relation, ClosureReport]:
    started = time.perf_counter()
    d, iterations = _studeny(m)
    return d, ClosureReport(iterations, 0, len(d), elapsed=time.perf_counter() - started)


def pre_expand_stable(rep: MixedRepresentation, max_vars: int | None = None) -> Relation:
    """Replace stable generators by their stable closure, as ordinary statements."""
    expanded = stab_closure_bruteforce(rep.ms, max_vars=max_vars) if len(rep.ms) else Relation(rep.universe)
    return expanded.with_flavor(Flavor.ORDINARY) | rep.mu


def expansion(rep: MixedRepresentation, max_vars: int | None = None) -> Relation:
    """The relation a mixed representation stands for."""
    return expand(rep.ms, S, max_vars=max_vars) | expand(rep.mu, O, max_vars=max_vars)
