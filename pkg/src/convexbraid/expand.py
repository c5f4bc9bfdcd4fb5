"""Rewriting every generator as a word in the Artin generators s1..s(n-1).

The pipeline is Twist -> Swing -> Rotation -> Band -> Artin.  Band generators
use the cabling

    R_ij = (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1),

and rotations factor from their smallest member, R_{b1..bk} = R_{b1 b2} R_{b1 b3} ... R_{b1 bk}.
Orientation is only fixed up to the mirror s_i -> s_i^-1; relator checks
cannot tell the two apart.
"""

from __future__ import annotations

from functools import lru_cache

from .convex import PunctureSet, canonical_admissible_order, crossing, cyclic_order_from
from .words import Band, Generator, Rotation, Swing, Twist, Word, rotation

# Artin letters are signed ints: +k is s_k, -k its inverse.
ArtinWord = tuple[int, ...]


def _reduce_ints(seq) -> ArtinWord:
    out: list[int] = []
    for x in seq:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _to_word(letters: ArtinWord) -> Word:
    return Word((Band(abs(k), abs(k) + 1), 1 if k > 0 else -1) for k in letters)


def _band_ints(i: int, j: int) -> ArtinWord:
    if j == i + 1:
        return (i,)
    up = tuple(range(j - 1, i, -1))
    return up + (i,) + tuple(-k for k in reversed(up))


def band_to_artin(i: int, j: int, n: int) -> Word:
    if not (1 <= i < j <= n):
        raise ValueError(f"band ({i}, {j}) out of range for n={n}")
    return _to_word(_band_ints(i, j))


def rotation_to_bands(b: PunctureSet, start: int | None = None) -> Word:
    """R_B as a product of band generators read from ``start`` (default: min label)."""
    if len(b) < 2:
        raise ValueError("rotation needs at least two punctures")
    order = canonical_admissible_order(b) if start is None else cyclic_order_from(b, start)
    head = order[0]
    return Word((Band(head, x), 1) for x in order[1:])


def swing_to_rotations(b: PunctureSet) -> Word:
    if len(b) < 1:
        raise ValueError("swing over an empty set")
    if len(b) == 1:
        return Word()
    return Word.gen(rotation(b), len(b))


def twist_to_swings(b: PunctureSet, c: PunctureSet, keep_trivial: bool = False) -> Word:
    """T_{B,C} = S_B^-1 S_C^-1 S_BC; singleton swings are dropped unless ``keep_trivial``."""
    if not b.isdisjoint(c):
        raise ValueError("twist sets overlap")
    if crossing(b, c):
        raise ValueError("twist sets are crossing")
    letters = []
    for x in (b, c):
        if len(x) > 1 or keep_trivial:
            letters.append((Swing(x), -1))
    letters.append((Swing(b | c), 1))
    return Word(letters)


def expand_once(g: Generator) -> Word:
    """One step down the pipeline."""
    if isinstance(g, Twist):
        return twist_to_swings(g.b, g.c)
    if isinstance(g, Swing):
        return swing_to_rotations(g.b)
    if isinstance(g, Rotation):
        return rotation_to_bands(g.b)
    if isinstance(g, Band):
        if g.j == g.i + 1:
            return Word([(g, 1)])
        return _to_word(_band_ints(g.i, g.j))
    raise TypeError(f"not a generator: {g!r}")


@lru_cache(maxsize=None)
def generator_artin(g: Generator) -> ArtinWord:
    """Reduced Artin expansion of one generator, as signed ints (cached)."""
    if isinstance(g, Band):
        return _band_ints(g.i, g.j)
    out: list[int] = []
    for h, e in expand_once(g):
        part = generator_artin(h)
        out.extend(part if e > 0 else (-x for x in reversed(part)))
    return _reduce_ints(out)


def artin_ints(w: Word) -> ArtinWord:
    out: list[int] = []
    for g, e in w:
        part = generator_artin(g)
        out.extend(part if e > 0 else (-x for x in reversed(part)))
    return _reduce_ints(out)


def expand_full(w: Word) -> Word:
    """The same braid as a freely reduced word in s1..s(n-1)."""
    return _to_word(artin_ints(w))


def support_size(w: Word) -> int:
    """Largest label any letter touches; a lower bound for the disc size."""
    top = 1
    for g, _ in w:
        top = max(top, max(g.support))
    return top
