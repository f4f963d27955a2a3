"""Generator alphabet for inversion/deletion/rotation/reflection events.

Words over this alphabet label paths in the size-indexed event digraph:
inversions, rotations and reflections keep the size n, a deletion drops it
to n-1.  Evaluation turns a word into the partial permutation it composes
to (left to right), and the rewriter normalizes any word into the shape
(deletions)(inversions)(dihedral) without changing its evaluation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidArgumentError, WordTypeError
from .genome import ReferenceFrame
from .pperm import PartialPerm

INV, DEL, ROT, REFL = "inv", "del", "rot", "refl"


@dataclass(frozen=True)
class Generator:
    """One event symbol: inversion s, deletion d, rotation c, reflection a."""

    kind: str
    i: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError(f"generator size must be >= 1, got {self.n}")
        if self.kind == INV:
            if not 1 <= self.i <= self.n:
                raise InvalidArgumentError(f"inversion index {self.i} outside 1..{self.n}")
        elif self.kind == DEL:
            if self.n < 2:
                raise InvalidArgumentError("deletions need size >= 2")
            if not 1 <= self.i <= self.n:
                raise InvalidArgumentError(f"deletion index {self.i} outside 1..{self.n}")
        elif self.kind in (ROT, REFL):
            if self.i != 0:
                raise InvalidArgumentError("rotation/reflection carries no index")
        else:
            raise InvalidArgumentError(f"unknown generator kind {self.kind!r}")

    @classmethod
    def inversion(cls, i: int, n: int) -> Generator:
        return cls(INV, i, n)

    @classmethod
    def deletion(cls, i: int, n: int) -> Generator:
        return cls(DEL, i, n)

    @classmethod
    def rotation(cls, n: int) -> Generator:
        return cls(ROT, 0, n)

    @classmethod
    def reflection(cls, n: int) -> Generator:
        return cls(REFL, 0, n)

    @property
    def src(self) -> int:
        return self.n

    @property
    def tgt(self) -> int:
        return self.n - 1 if self.kind == DEL else self.n

    @property
    def is_dihedral(self) -> bool:
        return self.kind in (ROT, REFL)

    def __str__(self) -> str:
        return format_generator(self)


def eval_generator(g: Generator) -> PartialPerm:
    n = g.n
    if g.kind == INV:
        # s_{i;n} swaps i and i+1; s_{n;n} is the wraparound pair (1, n).
        if n == 1:
            return PartialPerm.identity(1)
        a, b = (g.i, g.i + 1) if g.i < n else (1, n)
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return PartialPerm.from_image(n, img)
    if g.kind == DEL:
        # The order-preserving map dropping position i: later positions
        # close ranks by one.
        img = [(j if j < g.i else j - 1) for j in range(1, n + 1)]
        img[g.i - 1] = 0
        return PartialPerm.from_image(n - 1, img)
    if g.kind == ROT:
        return PartialPerm.from_image(n, [j % n + 1 for j in range(1, n + 1)])
    # Reflection: i <-> n+1-i.
    return PartialPerm.from_image(n, [n + 1 - j for j in range(1, n + 1)])


class Word:
    """A composable sequence of generators, with its source size.

    The source size is explicit so the empty word is well-typed.
    """

    __slots__ = ("letters", "src")

    def __init__(self, letters: Iterable[Generator] = (), src: int | None = None):
        letters = tuple(letters)
        if src is None:
            if not letters:
                raise WordTypeError("empty word needs an explicit source size")
            src = letters[0].src
        size = src
        for g in letters:
            if g.src != size:
                raise WordTypeError(
                    f"generator {g} expects size {g.src} but the word is at size {size}"
                )
            size = g.tgt
        self.letters = letters
        self.src = src

    @classmethod
    def empty(cls, n: int) -> Word:
        return cls((), n)

    @property
    def tgt(self) -> int:
        return self.letters[-1].tgt if self.letters else self.src

    @property
    def event_length(self) -> int:
        """Number of inversion and deletion letters (dihedral letters are
        frame bookkeeping, not events)."""
        return sum(1 for g in self.letters if not g.is_dihedral)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __add__(self, other: Word) -> Word:
        if self.tgt != other.src:
            raise WordTypeError(
                f"cannot join word ending at size {self.tgt} with word starting at {other.src}"
            )
        return Word(self.letters + other.letters, self.src)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.src == other.src and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.src, self.letters))

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, src={self.src})"

    def __str__(self) -> str:
        return format_word(self)


def eval_word(w: Word) -> PartialPerm:
    out = PartialPerm.identity(w.src)
    for g in w:
        out = out * eval_generator(g)
    return out


def apply_to_frame(frame: ReferenceFrame, w: Word) -> ReferenceFrame:
    """Apply the word's events to a frame; deleted regions are dropped."""
    if frame.n != w.src:
        raise WordTypeError(f"word starts at size {w.src} but frame has {frame.n} regions")
    p = eval_word(w)
    out = [None] * p.n
    for i, tok in enumerate(frame.tokens, start=1):
        j = p(i)
        if j is not None:
            out[j - 1] = tok
    # Words of events always have full image, so every slot is filled.
    assert all(t is not None for t in out)
    return ReferenceFrame(frame.alphabet, tuple(out))


# -- serialization -----------------------------------------------------------

_TOKEN_RE = re.compile(r"^(?:([sd])(\d+);(\d+)|([ca])(\d+))$")


def format_generator(g: Generator) -> str:
    if g.kind == INV:
        return f"s{g.i};{g.n}"
    if g.kind == DEL:
        return f"d{g.i};{g.n}"
    return f"{'c' if g.kind == ROT else 'a'}{g.n}"


def parse_generator(token: str) -> Generator:
    m = _TOKEN_RE.match(token)
    if not m:
        raise WordTypeError(f"bad generator token {token!r}")
    if m.group(1):
        kind = INV if m.group(1) == "s" else DEL
        return Generator(kind, int(m.group(2)), int(m.group(3)))
    kind = ROT if m.group(4) == "c" else REFL
    return Generator(kind, 0, int(m.group(5)))


def format_word(w: Word) -> str:
    return " ".join(format_generator(g) for g in w)


def parse_word(text: str, src: int | None = None) -> Word:
    tokens = text.split()
    return Word((parse_generator(t) for t in tokens), src)


# -- generating sets ----------------------------------------------------------

def inversion_set(n: int) -> list[Generator]:
    """All circular adjacent inversions at size n, deduplicated.

    At n=2 the wraparound pair (1, n) coincides with s_{1;2}; keeping both
    would only add parallel edges.
    """
    top = n if n >= 3 else min(n, 1)
    return [Generator.inversion(i, n) for i in range(1, top + 1)]


# -- the relation table R1..R14 ----------------------------------------------

@dataclass(frozen=True)
class Relation:
    rule: str
    lhs: Word
    rhs: Word


def _w(*gens: Generator) -> Word:
    return Word(gens)


def relation_table(n: int) -> list[Relation]:
    """Every valid instance at size n of the fourteen defining relations.

    The R3 right-hand side uses c_{n-1}^(n-2), i.e. the inverse rotation
    written with positive letters; see the package notes for why the
    exponent is n-2.
    """
    if n < 2:
        raise InvalidArgumentError("relations start at size 2")
    s = lambda i, size=n: Generator.inversion(i, size)
    d = lambda i, size=n: Generator.deletion(i, size)
    c = lambda size=n: Generator.rotation(size)
    a = lambda size=n: Generator.reflection(size)
    out: list[Relation] = []

    for j in range(2, n):  # R1: i = n, 1 < j < n
        out.append(Relation("R1", _w(s(n), d(j)), _w(d(j), s(n - 1, n - 1))))
    out.append(Relation("R2", _w(s(n), d(n)), _w(d(1), c(n - 1))))
    out.append(Relation("R3", _w(s(n), d(1)), Word((d(n),) + (c(n - 1),) * (n - 2), n)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if i > j:  # R4
                out.append(Relation("R4", _w(s(i), d(j)), _w(d(j), s(i - 1, n - 1))))
            elif i + 1 < j:  # R5
                out.append(Relation("R5", _w(s(i), d(j)), _w(d(j), s(i, n - 1))))
            elif i == j:  # R6
                out.append(Relation("R6", _w(s(i), d(i)), _w(d(i + 1))))
            else:  # R7: j = i + 1
                out.append(Relation("R7", _w(s(i), d(i + 1)), _w(d(i))))
    for i in range(2, n + 1):  # R8
        out.append(Relation("R8", _w(c(), s(i)), _w(s(i - 1), c())))
    out.append(Relation("R9", _w(c(), s(1)), _w(s(n), c())))
    for i in range(2, n + 1):  # R10
        out.append(Relation("R10", _w(c(), d(i)), _w(d(i - 1), c(n - 1))))
    out.append(Relation("R11", _w(c(), d(1)), _w(d(n))))
    for i in range(1, n + 1):  # R12
        out.append(Relation("R12", _w(a(), d(i)), _w(d(n - i + 1), a(n - 1))))
    for i in range(1, n):  # R13
        out.append(Relation("R13", _w(a(), s(i)), _w(s(n - i), a())))
    out.append(Relation("R14", _w(a(), s(n)), _w(s(n), a())))
    return out


# -- deletions-first rewriting -------------------------------------------------

def _rewrite_pair(x: Generator, y: Generator) -> list[Generator] | None:
    """Rewrite one adjacent pair toward deletions-inversions-dihedral shape.

    Returns the replacement letters, or None when the pair is already in
    order.  Each rewrite strictly decreases the measure (#inversion letters
    left of a deletion, then #dihedral letters left of a non-dihedral
    letter), which guarantees termination.
    """
    n = x.n
    s = Generator.inversion
    d = Generator.deletion
    c = Generator.rotation
    a = Generator.reflection

    if x.kind == INV and y.kind == DEL:
        i, j = x.i, y.i
        if i == n:
            if 1 < j < n:
                return [d(j, n), s(n - 1, n - 1)]
            if j == n:
                return [d(1, n), c(n - 1)]
            return [d(n, n)] + [c(n - 1)] * (n - 2)  # j == 1
        if i == j:
            return [d(j + 1, n)]
        if i + 1 == j:
            return [d(i, n)]
        if i > j:
            return [d(j, n), s(i - 1, n - 1)]
        return [d(j, n), s(i, n - 1)]  # i + 1 < j
    if x.kind == ROT and y.kind == INV:
        i = y.i
        return [s(n if i == 1 else i - 1, n), c(n)]
    if x.kind == ROT and y.kind == DEL:
        i = y.i
        if i == 1:
            return [d(n, n)]
        return [d(i - 1, n), c(n - 1)]
    if x.kind == REFL and y.kind == DEL:
        return [d(n - y.i + 1, n), a(n - 1)]
    if x.kind == REFL and y.kind == INV:
        i = y.i
        return [s(n if i == n else n - i, n), a(n)]
    return None


def rewrite_deletions_first(w: Word) -> Word:
    """Normalize a word to (deletions)(inversions)(dihedral) shape.

    Evaluation is preserved exactly and the event length (inversion plus
    deletion letters) never increases; dihedral letters may accumulate as
    trailing frame symmetries.
    """
    letters = list(w.letters)
    changed = True
    while changed:
        changed = False
        k = 0
        while k + 1 < len(letters):
            repl = _rewrite_pair(letters[k], letters[k + 1])
            if repl is not None:
                letters[k:k + 2] = repl
                changed = True
                k = max(0, k - 1)
            else:
                k += 1
    return Word(letters, w.src)


def word_shape(w: Word) -> str:
    """The word's letters as a category string, e.g. 'ddssc'."""
    cat = {INV: "s", DEL: "d", ROT: "c", REFL: "a"}
    return "".join(cat[g.kind] for g in w)


def is_deletions_first(w: Word) -> bool:
    shape = word_shape(w).replace("a", "c")
    return bool(re.fullmatch(r"d*s*c*", shape))
