"""Partial permutations between finite position sets.

A partial permutation maps a subset of {1, ..., m} injectively into
{1, ..., n}.  Maps are written on the right and composed left to right:
``(f * g)(i) == g(f(i))``.  All positions are 1-based at the interface;
internally the image is a tuple of length m whose entry for position i is
either a value in 1..n or 0 for "undefined".
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import CapacityError, InvalidArgumentError

# The exact algorithms are only practical for small sizes; reject anything
# larger outright rather than letting searches run away.
MAX_POSITIONS = 16


def _check_size(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise InvalidArgumentError(f"sizes must be non-negative, got {m}, {n}")
    if m > MAX_POSITIONS or n > MAX_POSITIONS:
        raise CapacityError(
            f"partial permutations are capped at {MAX_POSITIONS} positions, got {m}x{n}"
        )


class PartialPerm:
    """An injective partial map from {1..m} to {1..n}."""

    __slots__ = ("m", "n", "_img")

    def __init__(self, m: int, n: int, mapping: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        _check_size(m, n)
        img = [0] * m
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        seen = set()
        for i, j in items:
            if not 1 <= i <= m:
                raise InvalidArgumentError(f"domain point {i} outside 1..{m}")
            if not 1 <= j <= n:
                raise InvalidArgumentError(f"image point {j} outside 1..{n}")
            if img[i - 1]:
                raise InvalidArgumentError(f"domain point {i} mapped twice")
            if j in seen:
                raise InvalidArgumentError(f"image point {j} hit twice (not injective)")
            seen.add(j)
            img[i - 1] = j
        self.m = m
        self.n = n
        self._img = tuple(img)

    @classmethod
    def from_image(cls, n: int, image: Sequence[int]) -> PartialPerm:
        """Build from an image row (length m, entries in 0..n, 0 = undefined)."""
        return cls(len(image), n, ((i + 1, v) for i, v in enumerate(image) if v))

    @classmethod
    def _unchecked(cls, m: int, n: int, img: tuple[int, ...]) -> PartialPerm:
        self = object.__new__(cls)
        self.m = m
        self.n = n
        self._img = img
        return self

    @classmethod
    def identity(cls, n: int) -> PartialPerm:
        _check_size(n, n)
        return cls._unchecked(n, n, tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, m: int, n: int) -> PartialPerm:
        _check_size(m, n)
        return cls._unchecked(m, n, (0,) * m)

    @classmethod
    def partial_identity(cls, points: Iterable[int], n: int) -> PartialPerm:
        """The idempotent fixing the given subset of {1..n}."""
        return cls(n, n, ((i, i) for i in points))

    # -- basic queries ------------------------------------------------------

    def __call__(self, i: int) -> int | None:
        if not 1 <= i <= self.m:
            raise InvalidArgumentError(f"position {i} outside 1..{self.m}")
        v = self._img[i - 1]
        return v if v else None

    @property
    def image_row(self) -> tuple[int, ...]:
        return self._img

    def domain(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self._img) if v)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self._img if v))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i + 1, v) for i, v in enumerate(self._img) if v)

    @property
    def rank(self) -> int:
        return sum(1 for v in self._img if v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialPerm):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self._img == other._img

    def __hash__(self) -> int:
        return hash((self.m, self.n, self._img))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {j}" for i, j in self.pairs())
        return f"PartialPerm({self.m}, {self.n}, {{{body}}})"

    # -- algebra ------------------------------------------------------------

    def __mul__(self, other: PartialPerm) -> PartialPerm:
        """Left-to-right composition: apply self first, then other."""
        if not isinstance(other, PartialPerm):
            return NotImplemented
        if self.n != other.m:
            raise InvalidArgumentError(
                f"cannot compose {self.m}x{self.n} with {other.m}x{other.n}"
            )
        g = other._img
        img = tuple(g[v - 1] if v else 0 for v in self._img)
        return PartialPerm._unchecked(self.m, other.n, img)

    compose = __mul__

    def inverse(self) -> PartialPerm:
        img = [0] * self.n
        for i, v in enumerate(self._img):
            if v:
                img[v - 1] = i + 1
        return PartialPerm._unchecked(self.n, self.m, tuple(img))

    def embed(self, size: int) -> PartialPerm:
        """The same pairs viewed inside the square monoid on `size` points."""
        if size < max(self.m, self.n):
            raise InvalidArgumentError(
                f"cannot embed {self.m}x{self.n} into {size}x{size}"
            )
        _check_size(size, size)
        img = self._img + (0,) * (size - self.m)
        return PartialPerm._unchecked(size, size, img)

    # -- order structure ----------------------------------------------------

    def crossings(self) -> list[tuple[int, int]]:
        """All pairs i < j in the domain whose images are in reversed order."""
        pts = self.pairs()
        out = []
        for a in range(len(pts)):
            i, fi = pts[a]
            for b in range(a + 1, len(pts)):
                j, fj = pts[b]
                if fi > fj:
                    out.append((i, j))
        return out

    def is_order_preserving(self) -> bool:
        return not self.crossings()

    def is_orientation_preserving(self) -> bool:
        """True iff the images along the ascending domain are cyclic.

        Cyclic means at most one descent, counting the wraparound
        comparison between the last and first image.
        """
        images = [v for v in self._img if v]
        k = len(images)
        if k <= 1:
            return True
        descents = sum(
            1 for t in range(k) if images[t] > images[(t + 1) % k]
        )
        return descents <= 1

    # -- debug rendering ----------------------------------------------------

    def diagram(self) -> str:
        """Two-row ASCII rendering; format not stable."""
        top = " ".join(f"{i:2d}" for i in range(1, self.m + 1))
        mid = " ".join(f"{v:2d}" if v else " ." for v in self._img)
        bot = " ".join(f"{j:2d}" for j in range(1, self.n + 1))
        return f"{top}\n{mid}\n{bot}"


def sigma_from_frames(tokens1: Sequence[str], tokens2: Sequence[str]) -> PartialPerm:
    """Pair the shared regions of two reference frames by position.

    Position i of the first frame maps to position j of the second exactly
    when both hold the same region.  Accepts reference frames or plain
    token sequences.
    """
    t1 = tuple(getattr(tokens1, "tokens", tokens1))
    t2 = tuple(getattr(tokens2, "tokens", tokens2))
    where = {tok: j + 1 for j, tok in enumerate(t2)}
    if len(where) != len(t2):
        raise InvalidArgumentError("second frame has repeated regions")
    if len(set(t1)) != len(t1):
        raise InvalidArgumentError("first frame has repeated regions")
    return PartialPerm(
        len(t1), len(t2),
        ((i + 1, where[tok]) for i, tok in enumerate(t1) if tok in where),
    )


def all_partial_perms(m: int, n: int):
    """Yield every element of the m-by-n partial permutation set."""
    from itertools import combinations, permutations

    _check_size(m, n)
    for r in range(min(m, n) + 1):
        for dom in combinations(range(1, m + 1), r):
            for img_set in combinations(range(1, n + 1), r):
                for img in permutations(img_set):
                    yield PartialPerm(m, n, zip(dom, img))
