"""Region alignment: fewest adjacent inversions until shared regions agree.

Given the pairing of shared regions between two frames, the solver looks
for the cheapest way to multiply on the left (inversions of the first
genome) and on the right (inversions of the second) until the pairing is
orientation preserving, i.e. the shared regions sit in the same clockwise
cyclic order on both circles.

Three routes compute the same number: a breadth-first search directly over
pairings (the default engine), the same search inside the prebuilt
rank-class graph, and an iterative-deepening oracle with its own traversal
and its own orientation test.  Tests hold all three together.

Minimizing over reference pairs only needs two of the 4mn frame pairs:
rotating either frame conjugates the inversion alphabet (rotations
preserve circular adjacency) and multiplies the pairing by a rotation,
which preserves orientation; reflecting both frames does the same.  So the
cost depends only on whether the second frame is read reflected relative
to the first.  The fast mode uses this; the full enumeration stays as the
cross-validated baseline.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .algebra import Generator, Word
from .cayley import LEFT, RIGHT, DClassGraph
from .genome import DihedralElement, Genome, ReferenceFrame, dihedral_apply
from .pperm import PartialPerm, sigma_from_frames

ImageRow = tuple[int, ...]


def _defined(row: ImageRow) -> list[int]:
    return [v for v in row if v]


def row_is_popi(row: ImageRow) -> bool:
    images = _defined(row)
    k = len(images)
    if k <= 1:
        return True
    return sum(1 for t in range(k) if images[t] > images[(t + 1) % k]) <= 1


def row_is_poi(row: ImageRow) -> bool:
    images = _defined(row)
    return all(a < b for a, b in zip(images, images[1:]))


def _swap_pairs(n: int) -> list[tuple[int, int]]:
    """0-based position pairs of the circular adjacent inversions, deduplicated."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]


def _swap_positions(row: ImageRow, a: int, b: int) -> ImageRow:
    lst = list(row)
    lst[a], lst[b] = lst[b], lst[a]
    return tuple(lst)


def _swap_values(row: ImageRow, a: int, b: int) -> ImageRow:
    return tuple(b if v == a else a if v == b else v for v in row)


@dataclass(frozen=True)
class AlignmentSolution:
    """A witnessing minimum: inversion words for each side plus the
    orientation-preserving pairing they produce."""

    cost: int
    left_inversions: Word
    right_inversions: Word
    witness: PartialPerm

    def __post_init__(self):
        assert self.cost == len(self.left_inversions) + len(self.right_inversions)


def solve_pair(sigma: PartialPerm) -> AlignmentSolution:
    """Minimum inversions (left on the m side, right on the n side) making
    the pairing orientation preserving, with a lexicographically least
    shortest move sequence (left moves order before right, then by index).
    """
    m, n = sigma.m, sigma.n
    if m > n:
        mirror = solve_pair(sigma.inverse())
        return AlignmentSolution(
            mirror.cost,
            Word(tuple(reversed(mirror.right_inversions.letters)), m),
            Word(tuple(reversed(mirror.left_inversions.letters)), n),
            mirror.witness.inverse(),
        )
    start = sigma.image_row
    if row_is_popi(start):
        return AlignmentSolution(0, Word.empty(m), Word.empty(n), sigma)

    left_pairs = _swap_pairs(m)
    right_values = [(a + 1, b + 1) for a, b in _swap_pairs(n)]
    parent: dict[ImageRow, tuple[ImageRow, int, int] | None] = {start: None}
    queue = deque([start])
    goal = None
    while queue and goal is None:
        row = queue.popleft()
        for gi, (a, b) in enumerate(left_pairs, start=1):
            nxt = _swap_positions(row, a, b)
            if nxt not in parent:
                parent[nxt] = (row, LEFT, gi)
                if row_is_popi(nxt):
                    goal = nxt
                    break
                queue.append(nxt)
        if goal is not None:
            break
        for gi, (a, b) in enumerate(right_values, start=1):
            nxt = _swap_values(row, a, b)
            if nxt not in parent:
                parent[nxt] = (row, RIGHT, gi)
                if row_is_popi(nxt):
                    goal = nxt
                    break
                queue.append(nxt)
    assert goal is not None, "every rank class contains orientation-preserving elements"

    moves = []
    at = goal
    while parent[at] is not None:
        prev, side, gi = parent[at]
        moves.append((side, gi))
        at = prev
    moves.reverse()
    left_chrono = [gi for side, gi in moves if side == LEFT]
    right_chrono = [gi for side, gi in moves if side == RIGHT]
    left_word = Word([Generator.inversion(gi, m) for gi in reversed(left_chrono)], m)
    right_word = Word([Generator.inversion(gi, n) for gi in right_chrono], n)
    return AlignmentSolution(len(moves), left_word, right_word,
                             PartialPerm.from_image(n, goal))


def solve_pair_via_cayley(sigma: PartialPerm, graph: DClassGraph) -> int:
    """The same minimum, read off the memoised rank-class graph."""
    m, n, r = sigma.m, sigma.n, sigma.rank
    if m > n:
        raise InvalidArgumentError("cayley route needs m <= n; solve the inverse instead")
    if (graph.n, graph.m, graph.r) != (n, m, r):
        raise InvalidArgumentError(
            f"class graph is for (n={graph.n}, m={graph.m}, r={graph.r}), "
            f"got sigma with (n={n}, m={m}, r={r})"
        )
    start_row = sigma.embed(n).image_row
    index = graph.vertex_index()
    start = index[start_row]

    def is_target(row: ImageRow) -> bool:
        return all(v == 0 for v in row[m:]) and row_is_popi(row)

    if is_target(start_row):
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for _side, _gi, v in graph.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                if is_target(graph.vertices[v]):
                    return dist[v]
                queue.append(v)
    raise InvalidArgumentError("no orientation-preserving element reachable; bad graph")


def mu_oracle(sigma: PartialPerm, depth_cap: int) -> int | None:
    """Independent check of the alignment cost by exhaustive deepening.

    Tries every split of every total length up to the cap, enumerating
    left words then right words (any interleaving is equivalent to one of
    this shape because left and right multiplications commute).  Returns
    the exact minimum, or None when it exceeds the cap.
    """
    if depth_cap < 0:
        raise InvalidArgumentError("depth cap must be >= 0")
    m, n = sigma.m, sigma.n
    start = sigma.image_row
    left_pairs = _swap_pairs(m)
    right_values = [(a + 1, b + 1) for a, b in _swap_pairs(n)]

    def cyclic(row: ImageRow) -> bool:
        images = [v for v in row if v]
        k = len(images)
        if k <= 1:
            return True
        drops = 0
        for t in range(k):
            if images[t] > images[(t + 1) % k]:
                drops += 1
                if drops > 1:
                    return False
        return True

    def rights(row: ImageRow, b: int) -> bool:
        if b == 0:
            return cyclic(row)
        return any(rights(_swap_values(row, u, v), b - 1) for u, v in right_values)

    def lefts(row: ImageRow, a: int, b: int) -> bool:
        if a == 0:
            return rights(row, b)
        return any(lefts(_swap_positions(row, p, q), a - 1, b) for p, q in left_pairs)

    for total in range(depth_cap + 1):
        for a in range(total + 1):
            if lefts(start, a, total - a):
                return total
    return None


def reference_pairs(g1: Genome, g2: Genome, fast: bool) -> list[tuple[ReferenceFrame, ReferenceFrame]]:
    if fast:
        c1, c2 = g1.canonical, g2.canonical
        pairs = [(c1, c2)]
        flipped = dihedral_apply(c2, DihedralElement.reflection(c2.n))
        if flipped != c2:
            pairs.append((c1, flipped))
        return pairs
    return [(f1, f2) for f1 in g1.frames() for f2 in g2.frames()]


def min_over_reference_pairs(
    g1: Genome,
    g2: Genome,
    fast: bool = False,
    engine: str = "onthefly",
    cache_dir=None,
) -> tuple[tuple[ReferenceFrame, ReferenceFrame], AlignmentSolution]:
    """Minimize the alignment cost over reference pairs of the two genomes.

    The default enumerates the full frame product; the fast mode tries only
    the canonical frame against the canonical and reflected-canonical frame
    of the other genome (see the module docstring for why this is enough).
    """
    if g1.alphabet != g2.alphabet:
        raise InvalidArgumentError("genomes must share one alphabet")
    if engine not in ("onthefly", "cayley"):
        raise InvalidArgumentError(f"unknown engine {engine!r}")
    best: tuple[int, tuple[ReferenceFrame, ReferenceFrame]] | None = None
    for f1, f2 in reference_pairs(g1, g2, fast):
        sigma = sigma_from_frames(f1, f2)
        if engine == "cayley":
            cost = _cayley_cost(sigma, cache_dir)
        else:
            cost = solve_pair(sigma).cost
        if best is None or cost < best[0]:
            best = (cost, (f1, f2))
            if cost == 0:
                break
    assert best is not None
    pair = best[1]
    solution = solve_pair(sigma_from_frames(*pair))
    assert solution.cost == best[0]
    return pair, solution


def _cayley_cost(sigma: PartialPerm, cache_dir) -> int:
    from .cayley import get_dclass_graph

    if sigma.rank <= 1:
        return 0
    if sigma.m > sigma.n:
        sigma = sigma.inverse()
    graph = get_dclass_graph(sigma.n, sigma.m, sigma.rank, cache_dir)
    return solve_pair_via_cayley(sigma, graph)
