"""Enumeration of the square partial-permutation monoid and its Cayley graphs.

Elements are represented internally as image rows: tuples of length n whose
entry for position i is the image of i, or 0 when i is undefined.  The
monoid on n points is generated by the circular adjacent inversions
together with the partial identity on {1..n-1}; a breadth-first closure
from the identity in fixed generator order gives a deterministic indexing.

The rank-r class of the left/right union graph is the search arena for the
alignment solver; building it is the expensive step, so finished class
graphs can be stored in a small versioned binary cache.
"""
from __future__ import annotations

import os
import struct
from array import array
from dataclasses import dataclass
from math import comb, factorial
from pathlib import Path

from .errors import CacheIntegrityError, CapacityError, InvalidArgumentError
from .algebra import inversion_set, eval_generator
from .pperm import PartialPerm

MAX_ENUM = 8  # |I_8| is already 1.4M elements; anything larger is hopeless here.

LEFT, RIGHT = 0, 1

ImageRow = tuple[int, ...]


def monoid_size(n: int) -> int:
    """Closed-form element count: sum over ranks of C(n,r)^2 r!."""
    return sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))


def _row(p: PartialPerm) -> ImageRow:
    return p.image_row


def _compose(f: ImageRow, g: ImageRow) -> ImageRow:
    # image row of f then g
    return tuple(g[v - 1] if v else 0 for v in f)


def _rank(row: ImageRow) -> int:
    return sum(1 for v in row if v)


@dataclass(frozen=True)
class GenSet:
    """Inversions plus the rank-(n-1) partial identity, in generator order."""

    n: int
    inversion_rows: tuple[ImageRow, ...]      # index i-1 holds s_{i;n}
    partial_identity: ImageRow

    @classmethod
    def for_size(cls, n: int) -> GenSet:
        rows = tuple(_row(eval_generator(g)) for g in inversion_set(n))
        pid = tuple(range(1, n)) + (0,)
        return cls(n, rows, pid)

    def rows(self) -> list[ImageRow]:
        return list(self.inversion_rows) + [self.partial_identity]

    def embedded_rows(self, size: int) -> list[ImageRow]:
        """The same generators as elements of the monoid on `size` points."""
        pad = (0,) * (size - self.n)
        return [r + pad for r in self.rows()]


class MonoidEnumeration:
    """All elements of the partial-permutation monoid on n points, indexed,
    with complete left and right Cayley edges for the generating set.

    Never mutated after construction; safe to share across threads.
    """

    def __init__(self, n: int):
        if not 1 <= n <= MAX_ENUM:
            raise CapacityError(f"monoid enumeration supports 1 <= n <= {MAX_ENUM}, got {n}")
        self.n = n
        self.gens = GenSet.for_size(n)
        gen_rows = self.gens.rows()
        self.gen_count = len(gen_rows)

        identity = tuple(range(1, n + 1))
        elements: list[ImageRow] = [identity]
        index: dict[ImageRow, int] = {identity: 0}
        right = array("i")
        head = 0
        while head < len(elements):
            x = elements[head]
            head += 1
            for g in gen_rows:
                y = _compose(x, g)
                j = index.get(y)
                if j is None:
                    j = len(elements)
                    index[y] = j
                    elements.append(y)
                right.append(j)
        left = array("i")
        for x in elements:
            for g in gen_rows:
                left.append(index[_compose(g, x)])
        self.elements = elements
        self.index = index
        self._right = right
        self._left = left

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, idx: int) -> PartialPerm:
        return PartialPerm.from_image(self.n, self.elements[idx])

    def index_of(self, p: PartialPerm) -> int:
        if p.m != self.n or p.n != self.n:
            raise InvalidArgumentError(f"element is {p.m}x{p.n}, monoid is on {self.n} points")
        return self.index[p.image_row]

    def right_target(self, idx: int, gen: int) -> int:
        return self._right[idx * self.gen_count + gen]

    def left_target(self, idx: int, gen: int) -> int:
        return self._left[idx * self.gen_count + gen]


_enum_memo: dict[int, MonoidEnumeration] = {}


def enumerate_monoid(n: int) -> MonoidEnumeration:
    if n not in _enum_memo:
        _enum_memo[n] = MonoidEnumeration(n)
    return _enum_memo[n]


@dataclass
class UnionGraph:
    """The right Cayley graph on n points overlaid with left multiplication
    by the generators of the embedded m-point monoid."""

    m: int
    n: int
    enum: MonoidEnumeration
    left_rows: list[ImageRow]          # embedded m-generators, inversions first
    left_targets: array                # len(elements) * len(left_rows)

    def left_target(self, idx: int, gen: int) -> int:
        return self.left_targets[idx * len(self.left_rows) + gen]


def build_union(m: int, n: int, enum: MonoidEnumeration) -> UnionGraph:
    if m > n:
        raise InvalidArgumentError(f"union graph needs m <= n, got m={m}, n={n}")
    if enum.n != n:
        raise InvalidArgumentError(f"enumeration is for {enum.n}, expected {n}")
    rows = GenSet.for_size(m).embedded_rows(n)
    if m == n:
        return UnionGraph(m, n, enum, rows, enum._left)
    targets = array("i")
    index = enum.index
    for x in enum.elements:
        for g in rows:
            targets.append(index[_compose(g, x)])
    return UnionGraph(m, n, enum, rows, targets)


@dataclass(frozen=True)
class DClassGraph:
    """The rank-r class with its rank-preserving inversion edges.

    Vertices are image rows in ascending order; adjacency entries are
    (side, inversion index, local target).  Partial-identity edges never
    survive induction (they are self-loops or drop rank), so only the
    inversion labels appear.
    """

    n: int
    m: int
    r: int
    vertices: tuple[ImageRow, ...]
    adjacency: tuple[tuple[tuple[int, int, int], ...], ...]

    def vertex_index(self) -> dict[ImageRow, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)


def induce_dclass(union: UnionGraph, r: int) -> DClassGraph:
    n, m = union.n, union.m
    if not 0 <= r <= n:
        raise InvalidArgumentError(f"rank {r} outside 0..{n}")
    enum = union.enum
    members = sorted(row for row in enum.elements if _rank(row) == r)
    local = {row: i for i, row in enumerate(members)}
    n_inv = len(inversion_set(n))
    m_inv = len(inversion_set(m))
    adjacency = []
    for row in members:
        idx = enum.index[row]
        edges = []
        for gi in range(m_inv):
            t = union.left_target(idx, gi)
            trow = enum.elements[t]
            j = local.get(trow)
            if j is not None and trow != row:
                edges.append((LEFT, gi + 1, j))
        for gi in range(n_inv):
            t = enum.right_target(idx, gi)
            trow = enum.elements[t]
            j = local.get(trow)
            if j is not None and trow != row:
                edges.append((RIGHT, gi + 1, j))
        adjacency.append(tuple(edges))
    return DClassGraph(n, m, r, tuple(members), tuple(adjacency))


def build_dclass_graph(n: int, m: int, r: int) -> DClassGraph:
    return induce_dclass(build_union(m, n, enumerate_monoid(n)), r)


# -- binary cache --------------------------------------------------------------
#
# Layout (all integers little-endian u32 unless noted): magic "IDCG",
# format version, n, m, r, vertex count, edge count; then the vertices in
# ascending order as n raw bytes each; then the edges as (source vertex,
# label, target vertex) triples where label = side * 256 + inversion index.

MAGIC = b"IDCG"
FORMAT_VERSION = 1


def cache_path(cache_dir, n: int, r: int) -> Path:
    return Path(cache_dir) / f"delta_{n}_{r}.bin"


def cache_store(graph: DClassGraph, cache_dir) -> Path:
    path = cache_path(cache_dir, graph.n, graph.r)
    path.parent.mkdir(parents=True, exist_ok=True)
    edges = [
        (u, side * 256 + gi, v)
        for u, adj in enumerate(graph.adjacency)
        for (side, gi, v) in adj
    ]
    blob = [MAGIC, struct.pack("<6I", FORMAT_VERSION, graph.n, graph.m, graph.r,
                               len(graph.vertices), len(edges))]
    for row in graph.vertices:
        blob.append(bytes(row))
    for u, label, v in edges:
        blob.append(struct.pack("<3I", u, label, v))
    path.write_bytes(b"".join(blob))
    return path


def cache_load(cache_dir, n: int, m: int, r: int) -> DClassGraph:
    path = cache_path(cache_dir, n, r)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CacheIntegrityError(f"cannot read cache file {path}: {exc}") from exc
    if len(data) < 4 + 24 or data[:4] != MAGIC:
        raise CacheIntegrityError(f"{path}: bad magic")
    version, fn, fm, fr, vcount, ecount = struct.unpack_from("<6I", data, 4)
    if version != FORMAT_VERSION:
        raise CacheIntegrityError(f"{path}: format version {version}, expected {FORMAT_VERSION}")
    if (fn, fm, fr) != (n, m, r):
        raise CacheIntegrityError(
            f"{path}: holds ({fn}, {fm}, {fr}), requested ({n}, {m}, {r})"
        )
    off = 4 + 24
    need = off + vcount * n + ecount * 12
    if len(data) != need:
        raise CacheIntegrityError(f"{path}: expected {need} bytes, found {len(data)}")
    vertices = []
    for _ in range(vcount):
        row = tuple(data[off:off + n])
        if any(v > n for v in row) or _rank(row) != r:
            raise CacheIntegrityError(f"{path}: vertex row out of range")
        vertices.append(row)
        off += n
    if vertices != sorted(set(vertices)):
        raise CacheIntegrityError(f"{path}: vertices not sorted/distinct")
    adjacency: list[list[tuple[int, int, int]]] = [[] for _ in range(vcount)]
    for _ in range(ecount):
        u, label, v = struct.unpack_from("<3I", data, off)
        off += 12
        side, gi = divmod(label, 256)
        if u >= vcount or v >= vcount or side not in (LEFT, RIGHT):
            raise CacheIntegrityError(f"{path}: edge out of range")
        adjacency[u].append((side, gi, v))
    return DClassGraph(n, m, r, tuple(vertices), tuple(tuple(a) for a in adjacency))


def default_cache_dir() -> Path:
    env = os.environ.get("INVDEL_CACHE")
    if env:
        return Path(env)
    if os.name == "nt":
        base = Path(os.environ.get("LOCALAPPDATA", Path.home() / "AppData" / "Local"))
    elif os.uname().sysname == "Darwin":
        base = Path.home() / "Library" / "Caches"
    else:
        base = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    return base / "invdel"


def get_dclass_graph(n: int, m: int, r: int, cache_dir=None) -> DClassGraph:
    """Load the class graph from cache, rebuilding on any mismatch."""
    if cache_dir is None:
        return build_dclass_graph(n, m, r)
    try:
        return cache_load(cache_dir, n, m, r)
    except CacheIntegrityError:
        graph = build_dclass_graph(n, m, r)
        cache_store(graph, cache_dir)
        return graph
