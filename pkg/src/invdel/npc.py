"""The partition reduction behind the hardness of balanced sorting.

A multiset of positive integers becomes a square partial permutation made
of disjoint crossing pairs, the j-th spanning a_j positions, with budget
k = sum(a).  Asking for an order-preserving result using equally many
adjacent inversions on each side within the budget is then exactly asking
for an equal-sum split of the multiset.  `solve_balancedsort` decides the
sorting question by exhaustive search so the reduction can be
machine-checked in both directions on small instances.

The sorting alphabet is the linear adjacent transpositions, without the
wraparound pair: a crossing then costs exactly its width to remove, which
is what makes the encoding faithful.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapacityError, InvalidArgumentError
from .pperm import PartialPerm

MAX_BALANCED = 12  # exhaustive balanced search; 12 covers |A|<=4, sum(A)<=8


@dataclass(frozen=True)
class BalancedSortInstance:
    sigma: PartialPerm
    k: int

    def __post_init__(self):
        if self.sigma.m != self.sigma.n:
            raise InvalidArgumentError("balanced sorting is defined on square partial permutations")
        if self.k < 0:
            raise InvalidArgumentError("budget must be non-negative")


def reduce_partition(values: Sequence[int]) -> BalancedSortInstance:
    """Encode an equal-sum-split instance as a balanced sorting instance.

    Element j contributes the involution pair (j + sum(a_1..a_{j-1})) <->
    (j + sum(a_1..a_j)); the pairs occupy disjoint stretches, so there is
    exactly one crossing per element and the j-th needs a_j adjacent
    inversions to undo.
    """
    values = tuple(values)
    if not values:
        raise InvalidArgumentError("the multiset must be nonempty")
    if any(a < 1 for a in values):
        raise InvalidArgumentError("all elements must be positive integers")
    total = sum(values)
    m = len(values) + total
    mapping = {}
    prefix = 0
    for j, a in enumerate(values, start=1):
        p = j + prefix
        q = j + prefix + a
        mapping[p] = q
        mapping[q] = p
        prefix += a
    return BalancedSortInstance(PartialPerm(m, m, mapping), total)


def partition_brute(values: Sequence[int]) -> bool:
    """Exact subset-sum scan for an equal split."""
    values = tuple(values)
    if len(values) > 24:
        raise CapacityError("brute-force split check is capped at 24 elements")
    if any(a < 1 for a in values):
        raise InvalidArgumentError("all elements must be positive integers")
    total = sum(values)
    if total % 2:
        return False
    reachable = 1
    for a in values:
        reachable |= reachable << a
    return bool((reachable >> (total // 2)) & 1)


def partition_witness(values: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """An equal-sum split (X, Y) of the multiset, or None."""
    values = tuple(values)
    total = sum(values)
    if total % 2:
        return None
    target = total // 2
    # DP over achievable sums with one witnessing subset each.
    best: dict[int, tuple[int, ...]] = {0: ()}
    for idx, a in enumerate(values):
        for s, subset in list(best.items()):
            t = s + a
            if t <= target and t not in best:
                best[t] = subset + (idx,)
    if target not in best:
        return None
    chosen = set(best[target])
    x = tuple(values[i] for i in sorted(chosen))
    y = tuple(values[i] for i in range(len(values)) if i not in chosen)
    return x, y


# -- exact balanced search -------------------------------------------------------
#
# States are nibble-packed image rows (4 bits per source position).  Left
# and right multiplications commute, so every balanced word pair has an
# all-lefts-then-rights form; and because the inversions are involutions a
# word of length c evaluating to a given element exists exactly when the
# minimum word length is <= c with the same parity.  The search therefore
# runs one bounded left BFS from sigma and, per left-length parity, one
# layered numpy BFS of right multiplications looking for an
# order-preserving state at a depth of matching parity.

def _pack(row: tuple[int, ...]) -> int:
    x = 0
    for i, v in enumerate(row):
        x |= v << (4 * i)
    return x


def _right_swap(x: np.ndarray, u: int, v: int, m: int) -> np.ndarray:
    out = x.copy()
    delta = np.uint64(u ^ v)
    for pos in range(m):
        s = np.uint64(4 * pos)
        nib = (x >> s) & np.uint64(0xF)
        hit = (nib == u) | (nib == v)
        out ^= np.where(hit, delta << s, np.uint64(0))
    return out


def _poi_mask(x: np.ndarray, m: int) -> np.ndarray:
    """True where the nonzero nibbles are strictly increasing by position."""
    ok = np.ones(x.shape, dtype=bool)
    last = np.zeros(x.shape, dtype=np.uint64)
    for pos in range(m):
        nib = (x >> np.uint64(4 * pos)) & np.uint64(0xF)
        defined = nib != 0
        ok &= ~defined | (nib > last)
        last = np.where(defined, nib, last)
    return ok


def _linear_swap_pairs(m: int) -> list[tuple[int, int]]:
    # Deliberately excludes the wraparound pair (1, m): the per-crossing
    # width argument that makes the reduction correct only holds for the
    # linear adjacent transpositions.  With the wraparound available, the
    # instance built from {8} is balanced-sortable in one move per side.
    return [(i, i + 1) for i in range(m - 1)]


def solve_balancedsort(inst: BalancedSortInstance) -> bool:
    """Decide whether equally many inversions on each side, within the
    budget, can make the pairing order preserving.

    Inversions here are the adjacent transpositions of the linear order,
    without the wraparound (see _linear_swap_pairs).  Word lengths are not
    parity-pure per state (a swap of two absent values is a self-loop), so
    both searches key on (state, depth parity): a word of length c
    reaching a state exists exactly when that parity class was reached at
    depth <= c.
    """
    sigma, k = inst.sigma, inst.k
    m = sigma.m
    if m > MAX_BALANCED:
        raise CapacityError(f"balanced search is capped at {MAX_BALANCED} positions, got {m}")
    if sigma.is_order_preserving():
        return True
    if m < 2:
        return False  # no moves available and sigma is not order preserving
    half = k // 2
    if half == 0:
        return False
    pairs = _linear_swap_pairs(m)

    # Bounded left BFS from sigma, keyed (state, depth parity).
    start = _pack(sigma.image_row)
    seen = {(start, 0)}
    sources_by_parity: dict[int, list[int]] = {0: [start], 1: []}
    frontier = [start]
    for depth in range(1, half + 1):
        parity = depth % 2
        nxt = []
        for x in frontier:
            for a, b in pairs:
                sa, sb = 4 * a, 4 * b
                diff = ((x >> sa) ^ (x >> sb)) & 0xF
                y = x ^ (diff << sa) ^ (diff << sb)
                if (y, parity) not in seen:
                    seen.add((y, parity))
                    sources_by_parity[parity].append(y)
                    nxt.append(y)
        frontier = nxt

    parity_bit = np.uint64(1 << 60)
    values = [(a + 1, b + 1) for a, b in pairs]
    for parity in (0, 1):
        if half < parity:
            continue
        sources = np.unique(np.array(sources_by_parity[parity], dtype=np.uint64))
        if sources.size == 0:
            continue
        layer = sources
        visited = sources.copy()  # keys: state | (right-depth parity << 60)
        max_depth = half if half % 2 == parity else half - 1
        for depth in range(0, max_depth + 1):
            if depth % 2 == parity and bool(_poi_mask(layer, m).any()):
                return True
            if depth == max_depth:
                break
            candidates = np.concatenate([_right_swap(layer, u, v, m) for u, v in values])
            keyed = np.unique(candidates) | (parity_bit if depth % 2 == 0 else np.uint64(0))
            lo = np.searchsorted(visited, keyed)
            hi = np.searchsorted(visited, keyed, side="right")
            fresh = keyed[lo == hi]
            if fresh.size == 0:
                break
            visited = np.union1d(visited, fresh)
            layer = fresh & np.uint64((1 << 60) - 1)
        del visited, layer
    return False
