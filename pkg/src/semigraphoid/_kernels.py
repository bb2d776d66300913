"""Array kernels for the brute-force closures and dominance expansion.

Every ordered triplet over ``n`` variables gets an integer code: variable
``i`` contributes ``label * 4**i`` with label 0 (unused), 1 (first side),
2 (second side) or 3 (conditioning set).  Codes of invalid triplets (an
empty side) are never marked as members.

Two interchangeable backends compute the same results:

* ``numba`` -- a semi-naive worklist over bitmasks, compiled with ``@njit``;
* ``numpy`` -- a vectorized round-based fixpoint over precomputed rule tables.

The numba path is used when it imports and ``SEMIGRAPHOID_DISABLE_NUMBA``
is unset (or ``0``); otherwise the numpy path runs.
"""

from __future__ import annotations

import functools
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None

BACKENDS = ("numba", "numpy")


def _numba_disabled() -> bool:
    return os.environ.get("SEMIGRAPHOID_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")


if numba is not None and not _numba_disabled():
    DEFAULT_BACKEND = "numba"
else:
    DEFAULT_BACKEND = "numpy"


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return DEFAULT_BACKEND
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    if backend == "numba" and numba is None:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


@functools.lru_cache(maxsize=None)
def tables(n: int):
    """Per-universe lookup tables.

    Returns ``(spread, a, b, c, valid)`` where ``spread[m]`` is
    ``sum(4**i for i in m)`` and ``a/b/c`` decode a code into its masks.
    """
    size = 4**n
    codes = np.arange(size, dtype=np.int64)
    a = np.zeros(size, dtype=np.int64)
    b = np.zeros(size, dtype=np.int64)
    c = np.zeros(size, dtype=np.int64)
    for i in range(n):
        digit = (codes >> (2 * i)) & 3
        a |= (digit == 1).astype(np.int64) << i
        b |= (digit == 2).astype(np.int64) << i
        c |= (digit == 3).astype(np.int64) << i
    masks = np.arange(1 << n, dtype=np.int64)
    spread = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        spread |= ((masks >> i) & 1) << (2 * i)
    valid = (a != 0) & (b != 0)
    for arr in (spread, a, b, c, valid):
        arr.setflags(write=False)
    return spread, a, b, c, valid


def encode(n: int, a: int, b: int, c: int) -> int:
    spread = tables(n)[0]
    return int(spread[a] + 2 * spread[b] + 3 * spread[c])


def encode_many(n: int, triples) -> np.ndarray:
    spread = tables(n)[0]
    out = np.empty(len(triples), dtype=np.int64)
    for k, (a, b, c) in enumerate(triples):
        out[k] = spread[a] + 2 * spread[b] + 3 * spread[c]
    return out


def decode_members(n: int, member: np.ndarray) -> list[tuple[int, int, int]]:
    _, a, b, c = tables(n)[:4]
    idx = np.flatnonzero(member)
    return list(zip(a[idx].tolist(), b[idx].tolist(), c[idx].tolist()))


# ---------------------------------------------------------------------------
# numpy backend


@functools.lru_cache(maxsize=None)
def rule_tables(n: int):
    """Single-step rule instances as ``(sources, targets)`` index arrays.

    Unary rules move one variable at a time (symmetry, decomposition, weak
    union and, separately, strong union); contraction is tabulated as all
    ``(X, Y | Z), (X, W | YZ) -> (X, YW | Z)`` instances.
    """
    spread, a, b, c, valid = tables(n)
    codes = np.flatnonzero(valid)
    ta, tb, tc = a[codes], b[codes], c[codes]

    def code(x, y, z):
        return spread[x] + 2 * spread[y] + 3 * spread[z]

    src = [codes]
    dst = [code(tb, ta, tc)]
    for i in range(n):
        bit = np.int64(1 << i)
        # drop i from the second side, or move it into the conditioning set
        sel = ((tb & bit) != 0) & (tb != bit)
        src += [codes[sel], codes[sel]]
        dst += [code(ta[sel], tb[sel] & ~bit, tc[sel]), code(ta[sel], tb[sel] & ~bit, tc[sel] | bit)]
    unary = (np.concatenate(src), np.concatenate(dst))

    ssrc, sdst = [], []
    for i in range(n):
        bit = np.int64(1 << i)
        sel = ((ta | tb | tc) & bit) == 0
        ssrc.append(codes[sel])
        sdst.append(code(ta[sel], tb[sel], tc[sel] | bit))
    strong = (np.concatenate(ssrc), np.concatenate(sdst))

    # label each variable 0 (unused), X, Y, W or Z
    combos = np.arange(5**n, dtype=np.int64)
    x = np.zeros_like(combos)
    y = np.zeros_like(combos)
    w = np.zeros_like(combos)
    z = np.zeros_like(combos)
    rest = combos.copy()
    for i in range(n):
        digit = rest % 5
        rest //= 5
        x |= (digit == 1).astype(np.int64) << i
        y |= (digit == 2).astype(np.int64) << i
        w |= (digit == 3).astype(np.int64) << i
        z |= (digit == 4).astype(np.int64) << i
    sel = (x != 0) & (y != 0) & (w != 0)
    x, y, w, z = x[sel], y[sel], w[sel], z[sel]
    contraction = (code(x, y, z), code(x, w, y | z), code(x, y | w, z))
    return unary, strong, contraction


def _closure_numpy(n: int, seeds: np.ndarray, strong_union: bool) -> np.ndarray:
    valid = tables(n)[4]
    (usrc, udst), (ssrc, sdst), (p1, p2, pdst) = rule_tables(n)
    member = np.zeros(4**n, dtype=bool)
    member[seeds] = True
    member &= valid
    while True:
        before = int(member.sum())
        # unary rules to a fixpoint first; each pass moves one variable
        while True:
            count = int(member.sum())
            member[udst[member[usrc]]] = True
            if strong_union:
                member[sdst[member[ssrc]]] = True
            if int(member.sum()) == count:
                break
        member[pdst[member[p1] & member[p2]]] = True
        if int(member.sum()) == before:
            return member


def _expand_numpy(n: int, dominators: np.ndarray, strong: bool) -> np.ndarray:
    _, a, b, c, valid = tables(n)
    out = np.zeros(4**n, dtype=bool)
    for x, y, z in dominators.tolist():
        for p, q in ((x, y), (y, x)):
            hit = ((a & ~p) == 0) & ((b & ~q) == 0) & ((c & z) == z)
            if not strong:
                hit &= (c & ~(p | q | z)) == 0
            out |= hit
    return out & valid


# ---------------------------------------------------------------------------
# numba backend

if numba is not None:

    @numba.njit(cache=True, inline="always")
    def _push(member, stack, top, spread, x, y, z):
        k = spread[x] + 2 * spread[y] + 3 * spread[z]
        if not member[k]:
            member[k] = True
            stack[top] = k
            top += 1
        return top

    @numba.njit(cache=True)
    def _closure_worklist(n, seeds, strong_union, spread, ta, tb, tc, valid):
        size = 4**n
        full = (1 << n) - 1
        member = np.zeros(size, dtype=np.bool_)
        stack = np.empty(size, dtype=np.int64)
        top = 0
        for s in seeds:
            if valid[s] and not member[s]:
                member[s] = True
                stack[top] = s
                top += 1
        while top > 0:
            top -= 1
            t = stack[top]
            x = ta[t]
            y = tb[t]
            z = tc[t]
            rest = full & ~(x | y | z)
            top = _push(member, stack, top, spread, y, x, z)
            # decomposition and weak union over every non-empty proper part of y
            s = (0 - y) & y
            while s != y:
                top = _push(member, stack, top, spread, x, s, z)
                top = _push(member, stack, top, spread, x, s, z | (y & ~s))
                s = (s - y) & y
            if strong_union:
                r = rest
                while r:
                    e = r & (0 - r)
                    top = _push(member, stack, top, spread, x, y, z | e)
                    r ^= e
            # contraction with t = <X, Y | Z> as first premise: need <X, W | YZ>
            yz = y | z
            w = (0 - rest) & rest
            while w != 0:
                if member[spread[x] + 2 * spread[w] + 3 * spread[yz]]:
                    top = _push(member, stack, top, spread, x, y | w, z)
                w = (w - rest) & rest
            # t = <X, W | Z2> as second premise: need <X, Y | Z2 \ Y> with Y within Z2
            v = (0 - z) & z
            while v != 0:
                zz = z & ~v
                if member[spread[x] + 2 * spread[v] + 3 * spread[zz]]:
                    top = _push(member, stack, top, spread, x, v | y, zz)
                v = (v - z) & z
        return member

    @numba.njit(cache=True)
    def _expand_loop(dominators, strong, ta, tb, tc, valid):
        size = ta.shape[0]
        out = np.zeros(size, dtype=np.bool_)
        for k in range(size):
            if not valid[k]:
                continue
            a = ta[k]
            b = tb[k]
            c = tc[k]
            for d in range(dominators.shape[0]):
                x = dominators[d, 0]
                y = dominators[d, 1]
                z = dominators[d, 2]
                if (c & z) != z:
                    continue
                if not strong and (c & ~(x | y | z)) != 0:
                    continue
                if ((a & ~x) == 0 and (b & ~y) == 0) or ((a & ~y) == 0 and (b & ~x) == 0):
                    out[k] = True
                    break
        return out


def closure(n: int, seeds, strong_union: bool = False, backend: str | None = None) -> np.ndarray:
    """Boolean membership array of the closure of ``seeds`` (ordered codes).

    With ``strong_union`` the stable axioms are used (strong union added to the
    semi-graphoid axioms), otherwise the semi-graphoid axioms alone.
    """
    backend = resolve_backend(backend)
    seeds = np.asarray(seeds, dtype=np.int64).reshape(-1)
    if backend == "numba":
        spread, a, b, c, valid = tables(n)
        return _closure_worklist(n, seeds, bool(strong_union), spread, a, b, c, valid)
    return _closure_numpy(n, seeds, strong_union)


def expand(n: int, dominators, strong: bool, backend: str | None = None) -> np.ndarray:
    """Membership array of all triplets (s- or o-) dominated by a dominator.

    ``dominators`` is an ``(k, 3)`` array of ``(a, b, c)`` masks; both
    orientations of each dominator are considered.
    """
    backend = resolve_backend(backend)
    dominators = np.asarray(dominators, dtype=np.int64).reshape(-1, 3)
    if backend == "numba":
        _, a, b, c, valid = tables(n)
        return _expand_loop(dominators, bool(strong), a, b, c, valid)
    return _expand_numpy(n, dominators, strong)


def warm_up() -> None:
    """Trigger JIT compilation so later calls measure steady-state cost."""
    if DEFAULT_BACKEND == "numba":
        closure(2, [encode(2, 1, 2, 0)], strong_union=True)
        expand(2, [(1, 2, 0)], strong=False)
