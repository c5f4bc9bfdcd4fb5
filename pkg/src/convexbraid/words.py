"""Generators, freely reduced words, and their text form.

Grammar (whitespace or ``*`` between atoms)::

    R{1,2,4}        rotation; R{i,j} is the band generator
    S{2,5}          swing
    T{4,5,6}|{1,2}  twist (unordered pair)
    s3              band generator R{3,4}
    1               the empty word

Any atom may carry ``^-1`` or ``^k``.  Exponents are expanded at parse time;
words only ever store signs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .convex import ConvexDisc, PunctureSet, crossing


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Band:
    """Band generator R_ij, a positive half-twist along the chord from i to j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise ValueError(f"bad band indices ({self.i}, {self.j})")
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)

    @property
    def support(self) -> tuple[int, ...]:
        return (self.i, self.j)

    def sort_key(self) -> tuple:
        return (0, (self.i, self.j))

    def __str__(self) -> str:
        if self.j == self.i + 1:
            return f"s{self.i}"
        return f"R{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class Rotation:
    """R_B for |B| >= 3; two-element rotations are :class:`Band`."""

    b: PunctureSet

    def __post_init__(self) -> None:
        if len(self.b) < 3:
            raise ValueError("rotations on two punctures are band generators; use rotation()")

    @property
    def support(self) -> tuple[int, ...]:
        return self.b.members

    def sort_key(self) -> tuple:
        return (1, self.b.members)

    def __str__(self) -> str:
        return "R" + _fmt(self.b)


@dataclass(frozen=True)
class Swing:
    """S_B = R_B^|B|; trivial when |B| = 1 but kept as a generator."""

    b: PunctureSet

    def __post_init__(self) -> None:
        if len(self.b) < 1:
            raise ValueError("swing over an empty set")

    @property
    def support(self) -> tuple[int, ...]:
        return self.b.members

    def sort_key(self) -> tuple:
        return (2, self.b.members)

    def __str__(self) -> str:
        return "S" + _fmt(self.b)


@dataclass(frozen=True, init=False)
class Twist:
    """T_{B,C}: full twist of two non-crossing subdiscs around each other."""

    b: PunctureSet
    c: PunctureSet

    def __init__(self, b: PunctureSet, c: PunctureSet):
        if not len(b) or not len(c):
            raise ValueError("twist over an empty set")
        if not b.isdisjoint(c):
            raise ValueError(f"twist sets {b!r} and {c!r} overlap")
        if crossing(b, c):
            raise ValueError(f"twist sets {b!r} and {c!r} are crossing")
        if c.members < b.members:
            b, c = c, b
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def union(self) -> PunctureSet:
        return self.b | self.c

    @property
    def support(self) -> tuple[int, ...]:
        return self.union.members

    def sort_key(self) -> tuple:
        return (3, self.b.members, self.c.members)

    def __str__(self) -> str:
        return "T" + _fmt(self.b) + "|" + _fmt(self.c)


Generator = Union[Band, Rotation, Swing, Twist]


def _fmt(b: PunctureSet) -> str:
    return "{" + ",".join(map(str, b.members)) + "}"


def rotation(b: PunctureSet) -> Generator:
    if len(b) < 2:
        raise ValueError("rotation needs at least two punctures")
    if len(b) == 2:
        return Band(*b.members)
    return Rotation(b)


Letter = tuple[Generator, int]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {e!r}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """A freely reduced word of signed generators, read left to right."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = _free_reduce(letters)
        self._hash = hash(self.letters)

    @classmethod
    def gen(cls, g: Generator, power: int = 1) -> "Word":
        e = 1 if power >= 0 else -1
        return cls([(g, e)] * abs(power))

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx])
        return self.letters[idx]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.letters)

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def exponent_sums(self) -> dict:
        out: dict = {}
        for g, e in self.letters:
            out[g] = out.get(g, 0) + e
        return out

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY = Word()


def reduce(letters: Iterable[Letter]) -> Word:
    return Word(letters)


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    k = 0
    letters = w.letters
    while k < len(letters):
        g, e = letters[k]
        run = 1
        while k + run < len(letters) and letters[k + run] == (g, e):
            run += 1
        power = e * run
        parts.append(str(g) if power == 1 else f"{g}^{power}")
        k += run
    return " ".join(parts)


_TOKEN = re.compile(
    r"""
    (?P<ws>[\s*]+)
  | (?P<one>1)(?![\d{])
  | (?P<s>s(?P<s_k>\d+))
  | (?P<set>(?P<kind>[RST])\{(?P<a>[^{}]*)\}(?:\|\{(?P<b>[^{}]*)\})?)
  | (?P<exp>\^(?P<e>-?\d+))
""",
    re.VERBOSE,
)


def _labels(text: str, disc: ConvexDisc, pos: int) -> PunctureSet:
    try:
        items = [int(t) for t in text.split(",")] if text.strip() else []
    except ValueError:
        raise ParseError(f"bad label list {{{text}}}", pos) from None
    try:
        return PunctureSet(disc, items)
    except ValueError as exc:
        raise ParseError(str(exc), pos) from None


def parse(text: str, disc: ConvexDisc | int) -> Word:
    if isinstance(disc, int):
        disc = ConvexDisc(disc)
    atoms: list[list] = []  # [Generator | None, power]
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected {text[pos]!r}", pos)
        if m.group("ws"):
            pass
        elif m.group("exp") is not None:
            if not atoms or atoms[-1][2]:
                raise ParseError("exponent without a preceding atom", pos)
            atoms[-1][1] *= int(m.group("e"))
            atoms[-1][2] = True
        elif m.group("one"):
            atoms.append([None, 1, False])
        elif m.group("s"):
            k = int(m.group("s_k"))
            if not 1 <= k < disc.n:
                raise ParseError(f"s{k} out of range for n={disc.n}", pos)
            atoms.append([Band(k, k + 1), 1, False])
        else:
            atoms.append([_set_atom(m, disc, pos), 1, False])
        pos = m.end()
    letters: list[Letter] = []
    for g, power, _ in atoms:
        if g is None:
            continue
        sign = 1 if power >= 0 else -1
        letters.extend([(g, sign)] * abs(power))
    return Word(letters)


def _set_atom(m: re.Match, disc: ConvexDisc, pos: int) -> Generator:
    kind = m.group("kind")
    b = _labels(m.group("a"), disc, pos)
    second = m.group("b")
    if kind == "T":
        if second is None:
            raise ParseError("twist needs two sets: T{..}|{..}", pos)
        c = _labels(second, disc, pos)
        try:
            return Twist(b, c)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    if second is not None:
        raise ParseError(f"{kind} takes a single set", pos)
    try:
        return rotation(b) if kind == "R" else Swing(b)
    except ValueError as exc:
        raise ParseError(str(exc), pos) from None


def parse_generator(text: str, disc: ConvexDisc | int) -> Generator:
    w = parse(text, disc)
    if len(w) != 1 or w.letters[0][1] != 1:
        raise ValueError(f"{text!r} is not a single generator")
    return w.letters[0][0]


def word_of(*parts: Union[Generator, Word, Sequence[Letter]]) -> Word:
    """Concatenate generators (as positive letters) and words."""
    letters: list[Letter] = []
    for p in parts:
        if isinstance(p, Word):
            letters.extend(p.letters)
        elif isinstance(p, (Band, Rotation, Swing, Twist)):
            letters.append((p, 1))
        else:
            letters.extend(p)
    return Word(letters)


def inv(g: Generator) -> Word:
    return Word([(g, -1)])
