"""Universes, variable sets, triplets and relations.

Variable sets are plain ``int`` bitmasks indexed by universe position, so
all set algebra is a handful of machine-word operations.  A triplet
``<A, B | C>`` stores its three masks in the orientation it was built with;
equality and hashing go through the canonical orientation (the side holding
the lowest variable index comes first) and ignore the flavor tag.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptySide, OverlappingSets, UniverseMismatch, UniverseTooLarge

VarSet = int

DEFAULT_MAX_VARS = 7


def bits(mask: VarSet) -> Iterator[int]:
    """Yield the member indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def varset(*indices: int) -> VarSet:
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative variable index {i}")
        mask |= 1 << i
    return mask


def subsets(mask: VarSet, *, proper: bool = False, nonempty: bool = False) -> Iterator[VarSet]:
    """Enumerate the submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        if not (nonempty and sub == 0) and not (proper and sub == mask):
            yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def popcount(mask: VarSet) -> int:
    return bin(mask).count("1")


def triplet_count(n: int) -> int:
    """Number of ordered triplets over ``n`` variables: 4^n - 2*3^n + 2^n."""
    return 4**n - 2 * 3**n + 2**n


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a universe needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"variable names must be non-empty strings, got {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        object.__setattr__(self, "names", names)

    @classmethod
    def of_size(cls, n: int) -> Universe:
        """Universe with variables named ``1 .. n``."""
        return cls(str(i) for i in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> VarSet:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def varset(self, names: Iterable[str]) -> VarSet:
        return varset(*(self.index(name) for name in names))

    def names_of(self, mask: VarSet) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def contains(self, mask: VarSet) -> bool:
        return mask & ~self.full == 0

    def check_guard(self, max_vars: int | None) -> None:
        limit = DEFAULT_MAX_VARS if max_vars is None else max_vars
        if self.n > limit:
            raise UniverseTooLarge(self.n, limit)

    def triplet(self, a: Iterable[str], b: Iterable[str], c: Iterable[str] = (), flavor=None) -> Triplet:
        """Build a triplet from variable names (in the given orientation)."""
        return Triplet(self.varset(a), self.varset(b), self.varset(c),
                       Flavor.ORDINARY if flavor is None else flavor)

    def format_triplet(self, t: Triplet) -> str:
        a, b, c = (",".join(self.names_of(m)) for m in (t.a, t.b, t.c))
        return f"<{a} ; {b} | {c}>" if c else f"<{a} ; {b}>"


class Flavor(enum.IntEnum):
    ORDINARY = 0
    STABLE = 1


def _canonical(a: VarSet, b: VarSet, c: VarSet) -> tuple[VarSet, VarSet, VarSet]:
    if (a & -a) < (b & -b):
        return a, b, c
    return b, a, c


@dataclass(frozen=True, eq=False, slots=True)
class Triplet:
    """An ordered statement ``<a, b | c>``: ``a`` and ``b`` independent given ``c``."""

    a: VarSet
    b: VarSet
    c: VarSet = 0
    flavor: Flavor = Flavor.ORDINARY
    key: tuple[VarSet, VarSet, VarSet] = field(init=False, repr=False)

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if a < 0 or b < 0 or c < 0:
            raise ValueError("variable sets must be non-negative bitmasks")
        if a & b or a & c or b & c:
            raise OverlappingSets(f"sets {a:#b}, {b:#b}, {c:#b} are not pairwise disjoint")
        if not a or not b:
            raise EmptySide("both independent sides of a triplet must be non-empty")
        object.__setattr__(self, "key", _canonical(a, b, c))

    def __eq__(self, other):
        if not isinstance(other, Triplet):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def support(self) -> VarSet:
        return self.a | self.b | self.c

    @property
    def oriented(self) -> tuple[VarSet, VarSet, VarSet]:
        return self.a, self.b, self.c

    def is_canonical(self) -> bool:
        return (self.a, self.b, self.c) == self.key

    def canonical(self) -> Triplet:
        if self.is_canonical():
            return self
        return Triplet(*self.key, self.flavor)

    def orientations(self) -> tuple[Triplet, Triplet]:
        """The canonical orientation followed by its symmetric image."""
        t = self.canonical()
        return t, sym(t)

    def with_flavor(self, flavor: Flavor) -> Triplet:
        if flavor == self.flavor:
            return self
        return Triplet(self.a, self.b, self.c, flavor)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        a, b, c = self.key
        return tuple(bits(a)), tuple(bits(b)), tuple(bits(c))

    def is_trivially_stable(self, universe: Universe) -> bool:
        return self.support == universe.full


def make_triplet(a: VarSet, b: VarSet, c: VarSet = 0, flavor: Flavor = Flavor.ORDINARY) -> Triplet:
    """Validate ``<a, b | c>`` and return it in canonical orientation."""
    return Triplet(a, b, c, flavor).canonical()


def sym(t: Triplet) -> Triplet:
    return Triplet(t.b, t.a, t.c, t.flavor)


class Relation:
    """An immutable, duplicate-free set of triplets over one universe.

    Membership, length and iteration are in terms of canonical statements;
    a statement and its symmetric image count once.  Adding a statement
    that is already present keeps the stronger of the two flavors.
    """

    __slots__ = ("universe", "_items")

    def __init__(self, universe: Universe, triplets: Iterable[Triplet] = ()):
        items: dict[tuple[int, int, int], Triplet] = {}
        full = universe.full
        for t in triplets:
            if t.support & ~full:
                raise UniverseMismatch(
                    f"triplet {t!r} uses variables outside a universe of size {universe.n}"
                )
            old = items.get(t.key)
            if old is None or t.flavor > old.flavor:
                items[t.key] = t.canonical()
        self.universe = universe
        self._items = items

    @classmethod
    def from_keys(cls, universe: Universe, keys: Iterable[tuple[int, int, int]],
                  flavor: Flavor = Flavor.ORDINARY) -> Relation:
        return cls(universe, (Triplet(a, b, c, flavor) for a, b, c in keys))

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Triplet]:
        return iter(self.sorted())

    def __contains__(self, t) -> bool:
        return isinstance(t, Triplet) and t.key in self._items

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.universe == other.universe and self._items.keys() == other._items.keys()

    def __hash__(self):
        return hash((self.universe, frozenset(self._items)))

    def __le__(self, other: Relation) -> bool:
        return self._items.keys() <= other._items.keys()

    def __or__(self, other: Relation) -> Relation:
        self._check_same_universe(other)
        return Relation(self.universe, [*self._items.values(), *other._items.values()])

    def __sub__(self, other: Relation) -> Relation:
        self._check_same_universe(other)
        return Relation(self.universe, (t for k, t in self._items.items() if k not in other._items))

    def __repr__(self) -> str:
        body = ", ".join(self.universe.format_triplet(t) for t in self.sorted())
        return f"Relation({{{body}}})"

    def _check_same_universe(self, other: Relation) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch("relations are over different universes")

    def keys(self):
        return self._items.keys()

    def get(self, t: Triplet) -> Triplet | None:
        return self._items.get(t.key)

    def flavor_of(self, t: Triplet) -> Flavor | None:
        found = self._items.get(t.key)
        return None if found is None else found.flavor

    def sorted(self) -> list[Triplet]:
        return sorted(self._items.values(), key=Triplet.sort_key)

    def ordered(self) -> Iterator[Triplet]:
        """Both orientations of every statement."""
        for t in self.sorted():
            yield t
            yield sym(t)

    def ordered_size(self) -> int:
        return 2 * len(self._items)

    def with_flavor(self, flavor: Flavor) -> Relation:
        return Relation(self.universe, (t.with_flavor(flavor) for t in self._items.values()))


def enumerate_all_triplets(universe: Universe, max_vars: int | None = None) -> Relation:
    """Every valid triplet over ``universe`` (the set T(N))."""
    universe.check_guard(max_vars)
    full = universe.full
    found = []
    for c in subsets(full):
        rest = full & ~c
        for a in subsets(rest, nonempty=True):
            for b in subsets(rest & ~a, nonempty=True):
                if (a & -a) < (b & -b):
                    found.append(Triplet(a, b, c))
    return Relation(universe, found)


def relation(universe: Universe, statements: Sequence[tuple], flavor: Flavor = Flavor.ORDINARY) -> Relation:
    """Convenience constructor from ``(a_names, b_names[, c_names])`` tuples."""
    return Relation(universe, (universe.triplet(*s, flavor=flavor) for s in statements))
