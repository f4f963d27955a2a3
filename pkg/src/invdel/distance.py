"""Genome distances and reconstruction of the most recent common ancestor.

The symmetric distance between two genomes counts one deletion per region
outside the shared set plus the minimum alignment cost over reference
pairs.  The ancestor construction replays the witnessing inversions, lines
the two intermediate frames up so the shared regions read in the same
order, and interleaves the private regions of each side into one circle.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .errors import CapacityError, InvalidArgumentError, NoPathError
from .algebra import Generator, Word, apply_to_frame
from .align import AlignmentSolution, min_over_reference_pairs
from .genome import (DihedralElement, Genome, ReferenceFrame, canonicalize,
                     dihedral_apply, region_set_ops)
from .pperm import sigma_from_frames

MAX_SORT_BFS = 10  # the inversion-only search walks S_k; beyond ~10 it explodes


@dataclass(frozen=True)
class DistanceResult:
    total: int
    deletions: int
    mu: int
    best_pair: tuple[ReferenceFrame, ReferenceFrame]
    solution: AlignmentSolution

    def __post_init__(self):
        assert self.total == self.deletions + self.mu


def mrca_distance(
    g1: Genome,
    g2: Genome,
    fast_pairs: bool = True,
    engine: str = "onthefly",
    cache_dir=None,
) -> DistanceResult:
    """Events separating the two genomes through their most recent common
    ancestor: deletions for the symmetric difference plus the minimum
    alignment cost."""
    _, sym_diff, _ = region_set_ops(g1, g2)
    pair, solution = min_over_reference_pairs(
        g1, g2, fast=fast_pairs, engine=engine, cache_dir=cache_dir
    )
    return DistanceResult(len(sym_diff) + solution.cost, len(sym_diff),
                          solution.cost, pair, solution)


# -- one-sided distance --------------------------------------------------------

def _restrict_frame(frame: ReferenceFrame, keep: frozenset[str]) -> ReferenceFrame:
    return ReferenceFrame(frame.alphabet, tuple(t for t in frame.tokens if t in keep))


def directed_distance(g1: Genome, g2: Genome) -> int:
    """Minimum inversions and deletions transforming the first genome into
    the second; only defined when the second's regions are a subset."""
    r1, r2 = g1.regions, g2.regions
    if not r2 <= r1:
        missing = ", ".join(sorted(r2 - r1))
        raise NoPathError(
            "no inversion/deletion sequence exists: target regions not in source "
            f"(missing from source: {missing})"
        )
    k = len(r2)
    deletions = len(r1) - k
    # Single-region deletions keep the survivors' cyclic order, so the
    # deletion phase always lands in one intermediate genome.
    intermediate = canonicalize(_restrict_frame(g1.canonical, r2))
    if k > MAX_SORT_BFS:
        raise CapacityError(f"inversion sorting is capped at {MAX_SORT_BFS} regions, got {k}")
    targets = {f.tokens for f in g2.frames()}
    start = intermediate.canonical.tokens
    if start in targets:
        return deletions
    pairs = _adjacent_pairs(k)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a, b in pairs:
            lst = list(cur)
            lst[a], lst[b] = lst[b], lst[a]
            nxt = tuple(lst)
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                if nxt in targets:
                    return deletions + dist[nxt]
                queue.append(nxt)
    raise AssertionError("inversions act transitively; unreachable")


def _adjacent_pairs(k: int) -> list[tuple[int, int]]:
    if k <= 1:
        return []
    if k == 2:
        return [(0, 1)]
    return [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]


# -- ancestor construction -------------------------------------------------------

@dataclass(frozen=True)
class AncestorScenario:
    """A most recent common ancestor with one fixed frame and the event
    words leading to each descendant."""

    ancestor: Genome
    ancestor_frame: ReferenceFrame
    events_to_g1: Word
    events_to_g2: Word
    gap_sets: tuple[tuple[str, ...], ...]

    @property
    def event_count(self) -> int:
        return len(self.events_to_g1) + len(self.events_to_g2)


def _deletion_word(frame: ReferenceFrame, drop: frozenset[str]) -> Word:
    """Delete the given regions from the frame, rightmost position first so
    earlier positions keep their indices."""
    positions = [i for i, t in enumerate(frame.tokens, start=1) if t in drop]
    letters = []
    size = frame.n
    for p in reversed(positions):
        letters.append(Generator.deletion(p, size))
        size -= 1
    return Word(letters, frame.n)


def construct_ancestor(
    g1: Genome,
    g2: Genome,
    fast_pairs: bool = True,
) -> AncestorScenario:
    """Build an ancestor realizing the minimum event count.

    The witnessing inversions are applied to the best reference pair; the
    second frame is then rotated so the last shared region sits at its
    final position, which makes the pairing order preserving and pins a
    deterministic circular cut for the ancestor.  Private regions of the
    second genome are appended after the first genome's regions within
    each gap between consecutive shared regions.
    """
    (f1, f2), solution = min_over_reference_pairs(g1, g2, fast=fast_pairs)
    m, n = f1.n, f2.n

    g1p = f1
    for gi in reversed([g.i for g in solution.left_inversions]):
        g1p = apply_to_frame(g1p, Word([Generator.inversion(gi, m)], m))
    right_chrono = [g.i for g in solution.right_inversions]
    g2p = f2
    for gi in right_chrono:
        g2p = apply_to_frame(g2p, Word([Generator.inversion(gi, n)], n))

    witness = sigma_from_frames(g1p, g2p)
    assert witness.is_orientation_preserving()

    dom = witness.domain()
    if dom:
        # Rotate the second frame so the last shared region lands at
        # position n; for an orientation-preserving pairing this always
        # yields an order-preserving one.
        shift = (n - witness(dom[-1])) % n
        if shift:
            f2 = dihedral_apply(f2, DihedralElement(n, -shift))
            g2p = dihedral_apply(g2p, DihedralElement(n, -shift))
            right_chrono = [(i - 1 + shift) % n + 1 for i in right_chrono]
            witness = sigma_from_frames(g1p, g2p)
    assert witness.is_order_preserving()

    # Gap sets: the second frame's private regions before, between, and
    # after its shared regions, in their order around that frame.
    common_pos2 = sorted(witness(i) for i in dom)
    bounds = [0] + common_pos2 + [n + 1]
    gaps = [tuple(g2p.tokens[bounds[t] : bounds[t + 1] - 1]) for t in range(len(bounds) - 1)]

    # Split the first frame into runs, each ending at a shared region, plus
    # the trailing private suffix: [prefix, r_1], [between, r_2], ...,
    # [suffix].  Within every stretch the first frame's own regions come
    # first, then the gap regions from the second frame.
    common = {g1p.tokens[i - 1] for i in dom}
    runs: list[list[str]] = [[]]
    for tok in g1p.tokens:
        runs[-1].append(tok)
        if tok in common:
            runs.append([])
    ancestor_tokens: list[str] = list(gaps[0])
    for t, run in enumerate(runs):
        if t == len(runs) - 1:
            ancestor_tokens.extend(run)
            if len(gaps) > 1:
                ancestor_tokens.extend(gaps[-1])
        elif t == 0:
            ancestor_tokens.extend(run)
        else:
            ancestor_tokens.extend(run[:-1])
            ancestor_tokens.extend(gaps[t])
            ancestor_tokens.append(run[-1])

    ancestor_frame = ReferenceFrame(g1.alphabet, tuple(ancestor_tokens))
    ancestor = canonicalize(ancestor_frame)

    del1 = _deletion_word(ancestor_frame, g2.regions - g1.regions)
    del2 = _deletion_word(ancestor_frame, g1.regions - g2.regions)
    inv1 = Word(list(solution.left_inversions), m)
    inv2 = Word([Generator.inversion(i, n) for i in reversed(right_chrono)], n)
    events1 = del1 + inv1
    events2 = del2 + inv2

    assert apply_to_frame(ancestor_frame, events1) == f1
    assert apply_to_frame(ancestor_frame, events2) == f2
    return AncestorScenario(ancestor, ancestor_frame, events1, events2, tuple(gaps))


def verify_scenario(scenario: AncestorScenario, g1: Genome, g2: Genome) -> bool:
    ok, _ = verify_scenario_report(scenario, g1, g2)
    return ok


def verify_scenario_report(scenario: AncestorScenario, g1: Genome, g2: Genome) -> tuple[bool, str]:
    """Replay the scenario and compare against the claimed genomes and the
    computed distance; on failure the report says what diverged."""
    problems = []
    try:
        landed1 = canonicalize(apply_to_frame(scenario.ancestor_frame, scenario.events_to_g1))
        if landed1 != g1:
            problems.append(f"side 1 lands in {landed1} instead of {g1}")
    except Exception as exc:  # noqa: BLE001 - report, do not crash
        problems.append(f"side 1 replay failed: {exc}")
    try:
        landed2 = canonicalize(apply_to_frame(scenario.ancestor_frame, scenario.events_to_g2))
        if landed2 != g2:
            problems.append(f"side 2 lands in {landed2} instead of {g2}")
    except Exception as exc:  # noqa: BLE001
        problems.append(f"side 2 replay failed: {exc}")
    expected = mrca_distance(g1, g2).total
    if scenario.event_count != expected:
        problems.append(f"event count {scenario.event_count} != distance {expected}")
    if canonicalize(scenario.ancestor_frame) != scenario.ancestor:
        problems.append("ancestor frame is not a frame of the ancestor genome")
    return (not problems, "ok" if not problems else "; ".join(problems))


# -- all-pairs matrices ----------------------------------------------------------

def distance_matrix(named: list[tuple[str, Genome]], fast_pairs: bool = True) -> list[list[int]]:
    if len(named) < 2:
        raise InvalidArgumentError("a distance matrix needs at least 2 genomes")
    k = len(named)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            d = mrca_distance(named[i][1], named[j][1], fast_pairs=fast_pairs).total
            out[i][j] = out[j][i] = d
    return out


def format_phylip(names: list[str], matrix: list[list[int]]) -> str:
    for name in names:
        if len(name) > 10:
            raise InvalidArgumentError(f"PHYLIP names are capped at 10 characters: {name!r}")
    lines = [f"{len(names)}"]
    for name, row in zip(names, matrix):
        lines.append(f"{name:<10}" + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def format_tsv(names: list[str], matrix: list[list[int]]) -> str:
    lines = ["\t".join(["name"] + names)]
    for name, row in zip(names, matrix):
        lines.append("\t".join([name] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"
