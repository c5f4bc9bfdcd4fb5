"""Equality of braids through the Artin action on a free group.

``s_k`` acts on the free group F(x_1..x_n) by

    x_k -> x_k x_{k+1} x_k^-1,   x_{k+1} -> x_k,   x_m -> x_m otherwise.

The action is faithful, so two words are the same braid exactly when they
induce the same automorphism.  Words are read left to right: the automorphism
of ``u v`` is "apply u's, then v's", i.e. ``x -> phi_v(phi_u(x))``.

Free-group words are tuples of signed ints (``-k`` is ``x_k^-1``) and are
reduced after every substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .expand import ArtinWord, artin_ints, generator_artin
from .words import Band, Generator, Word

FreeWord = tuple[int, ...]


def _reduce(seq) -> FreeWord:
    out: list[int] = []
    for x in seq:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inverse(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def _substitute(images: Sequence[FreeWord], table: dict, n: int) -> tuple[FreeWord, ...]:
    """Replace every letter of every image using ``table`` (letter -> word)."""
    result = []
    for img in images:
        out: list[int] = []
        for a in img:
            for x in table[a]:
                if out and out[-1] == -x:
                    out.pop()
                else:
                    out.append(x)
        result.append(tuple(out))
    return tuple(result)


def _letter_table(images: Sequence[FreeWord]) -> dict:
    table = {}
    for k, img in enumerate(images, start=1):
        table[k] = img
        table[-k] = _inverse(img)
    return table


@dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism of F_n given by basis images, with its inverse alongside."""

    n: int
    images: tuple[FreeWord, ...]
    inverse_images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> "FreeAutomorphism":
        basis = tuple((k,) for k in range(1, n + 1))
        return cls(n, basis, basis)

    @classmethod
    def artin_letter(cls, k: int, n: int) -> "FreeAutomorphism":
        """The automorphism of s_k (or of s_|k|^-1 when k < 0)."""
        if not 1 <= abs(k) < n:
            raise ValueError(f"Artin generator s{abs(k)} out of range for n={n}")
        i = abs(k)
        fwd = [(m,) for m in range(1, n + 1)]
        bwd = [(m,) for m in range(1, n + 1)]
        fwd[i - 1] = (i, i + 1, -i)
        fwd[i] = (i,)
        bwd[i - 1] = (i + 1,)
        bwd[i] = (-(i + 1), i, i + 1)
        if k > 0:
            return cls(n, tuple(fwd), tuple(bwd))
        return cls(n, tuple(bwd), tuple(fwd))

    def __call__(self, w: FreeWord) -> FreeWord:
        return _substitute([w], _letter_table(self.images), self.n)[0]

    def then(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """Apply ``self`` first, then ``other``."""
        if other.n != self.n:
            raise ValueError("rank mismatch")
        fwd = _substitute(self.images, _letter_table(other.images), self.n)
        bwd = _substitute(other.inverse_images, _letter_table(self.inverse_images), self.n)
        return FreeAutomorphism(self.n, fwd, bwd)

    def inverse(self) -> "FreeAutomorphism":
        return FreeAutomorphism(self.n, self.inverse_images, self.images)

    def is_identity(self) -> bool:
        return all(img == (k,) for k, img in enumerate(self.images, start=1))

    def check_inverse(self) -> bool:
        return self.then(self.inverse()).is_identity() and self.inverse().then(self).is_identity()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeAutomorphism) and self.n == other.n and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.n, self.images))


def _check_range(letters: ArtinWord, n: int) -> None:
    for k in letters:
        if not 1 <= abs(k) < n:
            raise ValueError(f"Artin generator s{abs(k)} out of range for n={n}")


def _action_of_ints(letters: ArtinWord, n: int) -> FreeAutomorphism:
    _check_range(letters, n)
    fwd = [(m,) for m in range(1, n + 1)]
    bwd_table = {m: (m,) for m in range(1, n + 1)}
    bwd_table.update({-m: (-m,) for m in range(1, n + 1)})
    for k in letters:
        i = abs(k)
        # fwd: substitute the letter's images into the current images
        if k > 0:
            t_i, t_j = (i, i + 1, -i), (i,)
        else:
            t_i, t_j = (i + 1,), (-(i + 1), i, i + 1)
        table = {i: t_i, -i: _inverse(t_i), i + 1: t_j, -(i + 1): _inverse(t_j)}
        for m in range(n):
            img = fwd[m]
            if i in img or -i in img or (i + 1) in img or -(i + 1) in img:
                out: list[int] = []
                for a in img:
                    for x in table.get(a, (a,)):
                        if out and out[-1] == -x:
                            out.pop()
                        else:
                            out.append(x)
                fwd[m] = tuple(out)
        # bwd: new inverse = letter inverse, then old inverse
        li, lj = _letter_inverse_images(k)
        ni = _reduce(x for a in li for x in bwd_table[a])
        nj = _reduce(x for a in lj for x in bwd_table[a])
        bwd_table[i], bwd_table[-i] = ni, _inverse(ni)
        bwd_table[i + 1], bwd_table[-(i + 1)] = nj, _inverse(nj)
    bwd = tuple(bwd_table[m] for m in range(1, n + 1))
    return FreeAutomorphism(n, tuple(fwd), bwd)


def _letter_inverse_images(k: int) -> tuple[FreeWord, FreeWord]:
    i = abs(k)
    if k > 0:
        return (i + 1,), (-(i + 1), i, i + 1)
    return (i, i + 1, -i), (i,)


def action_of(w: Word, n: int) -> FreeAutomorphism:
    """Automorphism of a word already written in band generators ``s_k``."""
    letters = []
    for g, e in w:
        if not (isinstance(g, Band) and g.j == g.i + 1):
            raise ValueError(f"{g} is not an Artin generator; expand the word first")
        letters.append(g.i * e)
    return _action_of_ints(tuple(letters), n)


@lru_cache(maxsize=None)
def generator_action(g: Generator, n: int) -> FreeAutomorphism:
    return _action_of_ints(generator_artin(g), n)


def _forward_images(w: Word, n: int) -> tuple[FreeWord, ...]:
    """Basis images of ``w``, composing cached generator actions."""
    images: tuple[FreeWord, ...] = tuple((k,) for k in range(1, n + 1))
    for g, e in w:
        a = generator_action(g, n)
        table = _letter_table(a.images if e > 0 else a.inverse_images)
        images = _substitute(images, table, n)
    return images


def word_action(w: Word, n: int) -> FreeAutomorphism:
    """Automorphism of an arbitrary word (any generator kinds)."""
    result = FreeAutomorphism.identity(n)
    for g, e in w:
        a = generator_action(g, n)
        result = result.then(a if e > 0 else a.inverse())
    return result


def equal(w1: Word, w2: Word, n: int) -> bool:
    """Whether two words over any generators are the same braid on ``n`` strands."""
    return _forward_images(w1, n) == _forward_images(w2, n)


def is_trivial(w: Word, n: int) -> bool:
    return all(img == (k,) for k, img in enumerate(_forward_images(w, n), start=1))


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n; ``mapping[k-1]`` is where puncture k ends up."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise ValueError(f"not a permutation: {self.mapping}")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.mapping, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for k in range(1, self.n + 1):
            if k in seen or self(k) == k:
                continue
            cyc = [k]
            seen.add(k)
            x = self(k)
            while x != k:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out


def permutation_of(w: Word, n: int) -> Permutation:
    """Image in the symmetric group: s_k is the transposition (k k+1), read left to right."""
    pos = list(range(1, n + 1))  # pos[p-1] = current location of puncture p
    for k in artin_ints(w):
        i = abs(k)
        if not 1 <= i < n:
            raise ValueError(f"Artin generator s{i} out of range for n={n}")
        for p in range(n):
            if pos[p] == i:
                pos[p] = i + 1
            elif pos[p] == i + 1:
                pos[p] = i
    return Permutation(tuple(pos))


def is_pure(w: Word, n: int) -> bool:
    return permutation_of(w, n).is_identity()


def conjugacy_permutation(a: FreeAutomorphism) -> Permutation:
    """Read off k -> m from x_k -> u x_m u^-1 (every braid automorphism has this shape)."""
    out = []
    for img in a.images:
        m = len(img) // 2
        out.append(abs(img[m]))
    return Permutation(tuple(out))
