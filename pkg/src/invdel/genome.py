"""Circular genomes as dihedral equivalence classes of region words.

A reference frame is one clockwise reading of the circle starting from a
distinguished point; the genome is the orbit of that word under rotations
and reflections.  Equality and hashing go through a canonical frame: the
lexicographically least word of the orbit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GenomeParseError, InvalidArgumentError


@dataclass(frozen=True)
class RegionAlphabet:
    """Ordered universe of region tokens; order is lexicographic."""

    tokens: tuple[str, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.tokens)) != len(self.tokens):
            raise InvalidArgumentError("alphabet tokens must be distinct")
        if list(self.tokens) != sorted(self.tokens):
            raise InvalidArgumentError("alphabet tokens must be sorted")
        self._index.update({t: i for i, t in enumerate(self.tokens)})

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> RegionAlphabet:
        return cls(tuple(sorted(set(tokens))))

    def index_of(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise InvalidArgumentError(f"token {token!r} not in alphabet") from None

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class ReferenceFrame:
    """One concrete clockwise reading of a circular genome.

    Frames over different alphabets compare by their token words, so the
    alphabet acts only as the shared universe for region-set operations.
    """

    alphabet: RegionAlphabet = field(compare=False)
    tokens: tuple[str, ...]

    def __post_init__(self):
        if not self.tokens:
            raise InvalidArgumentError("a reference frame needs at least one region")
        if len(set(self.tokens)) != len(self.tokens):
            raise InvalidArgumentError("regions in a frame must be distinct")
        for t in self.tokens:
            if t not in self.alphabet:
                raise InvalidArgumentError(f"token {t!r} not in alphabet")

    @classmethod
    def from_tokens(cls, alphabet: RegionAlphabet, tokens: Iterable[str]) -> ReferenceFrame:
        return cls(alphabet, tuple(tokens))

    @property
    def n(self) -> int:
        return len(self.tokens)

    def word(self) -> tuple[int, ...]:
        """The frame as alphabet indices."""
        return tuple(self.alphabet.index_of(t) for t in self.tokens)

    def __str__(self) -> str:
        return " ".join(self.tokens) if any(len(t) > 1 for t in self.tokens) else "".join(self.tokens)


@dataclass(frozen=True)
class DihedralElement:
    """A rotation/reflection symmetry of the n-gon of frame positions.

    `pos(i)` is the source position read into position i, so applying the
    element rewrites a word w to w' with w'[i] = w[pos(i)].  Composition is
    left to right on position maps:  pos(a * b) = pos_b(pos_a(i)).
    """

    n: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError("dihedral degree must be >= 1")
        object.__setattr__(self, "rotation", self.rotation % self.n)
        # For n <= 2 the reflection coincides with a rotation; normalize so
        # the group orders come out as 1 (n=1) and 2 (n=2).
        if self.n == 1 and self.reflected:
            object.__setattr__(self, "reflected", False)
        elif self.n == 2 and self.reflected:
            object.__setattr__(self, "reflected", False)
            object.__setattr__(self, "rotation", (self.rotation + 1) % 2)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(n, 0, False)

    @classmethod
    def rotation_by(cls, n: int, k: int) -> DihedralElement:
        return cls(n, k, False)

    @classmethod
    def reflection(cls, n: int) -> DihedralElement:
        return cls(n, 0, True)

    def pos(self, i: int) -> int:
        n = self.n
        if self.reflected:
            i = n + 1 - i
        return (i - 1 + self.rotation) % n + 1

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        if self.n != other.n:
            raise InvalidArgumentError("dihedral elements of different degree")
        rot = other.rotation + (-self.rotation if other.reflected else self.rotation)
        return DihedralElement(self.n, rot, self.reflected ^ other.reflected)

    def inverse(self) -> DihedralElement:
        if self.reflected:
            return self
        return DihedralElement(self.n, -self.rotation, False)

    @classmethod
    def all_elements(cls, n: int) -> list[DihedralElement]:
        if n == 1:
            return [cls(1)]
        if n == 2:
            return [cls(2, 0), cls(2, 1)]
        return [cls(n, r, e) for e in (False, True) for r in range(n)]


def dihedral_apply(frame: ReferenceFrame, g: DihedralElement) -> ReferenceFrame:
    """Re-read the frame after rotating/reflecting the circle."""
    if g.n != frame.n:
        raise InvalidArgumentError(
            f"dihedral degree {g.n} does not match frame length {frame.n}"
        )
    toks = frame.tokens
    return ReferenceFrame(frame.alphabet, tuple(toks[g.pos(i) - 1] for i in range(1, g.n + 1)))


def _orbit_words(tokens: tuple[str, ...]) -> list[tuple[str, ...]]:
    n = len(tokens)
    words = []
    rev = tokens[::-1]
    for k in range(n):
        words.append(tokens[k:] + tokens[:k])
    if n >= 2:
        for k in range(n):
            words.append(rev[k:] + rev[:k])
    seen = set()
    out = []
    for w in words:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


@dataclass(frozen=True)
class Genome:
    """A dihedral equivalence class of frames, keyed by its least frame."""

    canonical: ReferenceFrame

    @classmethod
    def from_frame(cls, frame: ReferenceFrame) -> Genome:
        best = min(_orbit_words(frame.tokens))
        return cls(ReferenceFrame(frame.alphabet, best))

    @classmethod
    def from_tokens(cls, alphabet: RegionAlphabet, tokens: Iterable[str]) -> Genome:
        return cls.from_frame(ReferenceFrame.from_tokens(alphabet, tokens))

    @property
    def n(self) -> int:
        return self.canonical.n

    @property
    def regions(self) -> frozenset[str]:
        return frozenset(self.canonical.tokens)

    @property
    def alphabet(self) -> RegionAlphabet:
        return self.canonical.alphabet

    def frames(self) -> list[ReferenceFrame]:
        """Every frame of the orbit, in a fixed deterministic order."""
        alphabet = self.canonical.alphabet
        return [ReferenceFrame(alphabet, w) for w in _orbit_words(self.canonical.tokens)]

    def __str__(self) -> str:
        return str(self.canonical)


def canonicalize(frame: ReferenceFrame) -> Genome:
    return Genome.from_frame(frame)


def region_set_ops(g1: Genome, g2: Genome) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """(intersection, symmetric difference, union) of the two region sets."""
    if g1.alphabet != g2.alphabet:
        raise InvalidArgumentError("genomes must share one alphabet")
    r1, r2 = g1.regions, g2.regions
    return r1 & r2, r1 ^ r2, r1 | r2


def genomes_from_token_lists(*token_lists: Sequence[str]) -> list[Genome]:
    """Build genomes over the shared union alphabet of all the lists."""
    alphabet = RegionAlphabet.from_tokens(t for toks in token_lists for t in toks)
    return [Genome.from_tokens(alphabet, toks) for toks in token_lists]


# -- genome text files -------------------------------------------------------
#
# One genome per line: `NAME: tok1 tok2 ... tokN`.  Lines starting with `#`
# are comments; blank lines are ignored; the circular order runs left to
# right clockwise from position 1.  One shared alphabet is built per file.

def parse_genomes(text: str) -> list[tuple[str, Genome]]:
    rows: list[tuple[int, str, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise GenomeParseError("expected `NAME: tok1 tok2 ...`", lineno)
        name, _, rest = line.partition(":")
        name = name.strip()
        toks = rest.split()
        if not name:
            raise GenomeParseError("empty genome name", lineno)
        if not toks:
            raise GenomeParseError(f"genome {name!r} has no regions", lineno)
        if len(set(toks)) != len(toks):
            raise GenomeParseError(f"genome {name!r} repeats a region", lineno)
        rows.append((lineno, name, toks))
    names = [name for _, name, _ in rows]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise GenomeParseError(f"duplicate genome name {dup!r}")
    alphabet = RegionAlphabet.from_tokens(t for _, _, toks in rows for t in toks)
    out = []
    for lineno, name, toks in rows:
        try:
            out.append((name, Genome.from_tokens(alphabet, toks)))
        except InvalidArgumentError as exc:
            raise GenomeParseError(str(exc), lineno) from exc
    return out


def load_genomes(path) -> list[tuple[str, Genome]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_genomes(fh.read())
