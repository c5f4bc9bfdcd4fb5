"""Combinatorics of punctures in convex position.

Punctures carry the labels ``1..n`` and are read clockwise, label ``i`` being
followed by ``i % n + 1``.  Every geometric predicate here (crossing hulls,
admissible orderings, nesting, compatibility) reduces to a question about how
label sets interleave along that cycle, so nothing in this module touches
coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class ConvexDisc:
    """A disc with ``n`` punctures in convex position, labelled clockwise."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"a convex disc needs at least one puncture, got n={self.n!r}")

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def successor(self, label: int) -> int:
        return label % self.n + 1

    def puncture_set(self, members: Iterable[int]) -> "PunctureSet":
        return PunctureSet(self, members)

    def subsets(self, min_size: int = 1, max_size: int | None = None) -> Iterator["PunctureSet"]:
        """Yield subsets ordered by size, then lexicographically."""
        top = self.n if max_size is None else min(max_size, self.n)
        for k in range(min_size, top + 1):
            for combo in itertools.combinations(self.labels, k):
                yield PunctureSet._trusted(self, combo)


@dataclass(frozen=True, init=False, order=False)
class PunctureSet:
    """A set of puncture labels of one disc, stored sorted."""

    disc: ConvexDisc
    members: tuple[int, ...]

    def __init__(self, disc: ConvexDisc | int, members: Iterable[int]):
        if isinstance(disc, int):
            disc = ConvexDisc(disc)
        ms = sorted(members)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise ValueError(f"duplicate label {a}")
        for m in ms:
            if not isinstance(m, int) or not 1 <= m <= disc.n:
                raise ValueError(f"label {m!r} is not a puncture of a disc with n={disc.n}")
        object.__setattr__(self, "disc", disc)
        object.__setattr__(self, "members", tuple(ms))

    @classmethod
    def _trusted(cls, disc: ConvexDisc, members: tuple[int, ...]) -> "PunctureSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "disc", disc)
        object.__setattr__(obj, "members", members)
        return obj

    @property
    def n(self) -> int:
        return self.disc.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, label: object) -> bool:
        return label in self.members

    def __lt__(self, other: "PunctureSet") -> bool:
        return self.members < other.members

    def __le__(self, other: "PunctureSet") -> bool:
        return self.members <= other.members

    def __or__(self, other: "PunctureSet") -> "PunctureSet":
        _same_disc(self, other)
        return PunctureSet._trusted(self.disc, tuple(sorted(set(self.members) | set(other.members))))

    def __sub__(self, other: "PunctureSet") -> "PunctureSet":
        _same_disc(self, other)
        drop = set(other.members)
        return PunctureSet._trusted(self.disc, tuple(m for m in self.members if m not in drop))

    def issubset(self, other: "PunctureSet") -> bool:
        return set(self.members) <= set(other.members)

    def isdisjoint(self, other: "PunctureSet") -> bool:
        return set(self.members).isdisjoint(other.members)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def _same_disc(*sets: PunctureSet) -> None:
    if len({s.n for s in sets}) > 1:
        raise ValueError("puncture sets live on different discs")


def _nonempty(*sets: PunctureSet) -> None:
    for s in sets:
        if not s.members:
            raise ValueError("empty puncture set")


def _pairwise_disjoint(sets: Sequence[PunctureSet]) -> None:
    seen: set[int] = set()
    for s in sets:
        for m in s.members:
            if m in seen:
                raise ValueError(f"puncture sets overlap in label {m}")
            seen.add(m)


def _cyclic_runs(sets: Sequence[PunctureSet]) -> list[int]:
    """Block indices met walking clockwise over the union, runs collapsed cyclically."""
    owner = {}
    for idx, s in enumerate(sets):
        for m in s.members:
            owner[m] = idx
    seq = [owner[m] for m in sorted(owner)]
    runs = [b for k, b in enumerate(seq) if k == 0 or seq[k - 1] != b]
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    return runs


def crossing(b: PunctureSet, c: PunctureSet) -> bool:
    """True when the convex hulls of two disjoint sets intersect."""
    _same_disc(b, c)
    _nonempty(b, c)
    _pairwise_disjoint([b, c])
    return len(_cyclic_runs([b, c])) > 2


def non_crossing(b: PunctureSet, c: PunctureSet) -> bool:
    return not crossing(b, c)


def non_crossing_family(sets: Sequence[PunctureSet]) -> bool:
    sets = [s for s in sets if s.members]
    if not sets:
        return True
    _same_disc(*sets)
    _pairwise_disjoint(sets)
    return all(len(_cyclic_runs([x, y])) <= 2 for x, y in itertools.combinations(sets, 2))


def admissible(sequence: Sequence[PunctureSet]) -> bool:
    """Whether the sets appear as consecutive clockwise blocks in the given order.

    Punctures outside the union are ignored.
    """
    if not sequence:
        raise ValueError("admissible() needs at least one set")
    _same_disc(*sequence)
    _nonempty(*sequence)
    _pairwise_disjoint(sequence)
    k = len(sequence)
    runs = _cyclic_runs(sequence)
    if len(runs) != k:
        return False
    start = runs.index(0)
    return all(runs[(start + t) % k] == t for t in range(k))


def nested(pair1: tuple[PunctureSet, PunctureSet], pair2: tuple[PunctureSet, PunctureSet]) -> bool:
    b, c = pair1
    d, e = pair2
    for x, y in (pair1, pair2):
        if crossing(x, y):
            raise ValueError(f"pair ({x!r}, {y!r}) is crossing")
    bc = set(b.members) | set(c.members)
    de = set(d.members) | set(e.members)
    return (
        bc <= set(d.members)
        or bc <= set(e.members)
        or de <= set(b.members)
        or de <= set(c.members)
    )


def compatible(b: PunctureSet, c: PunctureSet) -> bool:
    """Containment, or disjoint and non-crossing: the boundary curves can be made disjoint."""
    _same_disc(b, c)
    _nonempty(b, c)
    sb, sc = set(b.members), set(c.members)
    if sb <= sc or sc <= sb:
        return True
    if sb & sc:
        return False
    return len(_cyclic_runs([b, c])) <= 2


def canonical_admissible_order(b: PunctureSet) -> tuple[int, ...]:
    """Members in clockwise order starting at the smallest label."""
    _nonempty(b)
    return b.members


def cyclic_order_from(b: PunctureSet, start: int) -> tuple[int, ...]:
    """Members in clockwise order starting at ``start`` (which must be a member)."""
    ms = b.members
    k = ms.index(start)
    return ms[k:] + ms[:k]


def arc_between(disc: ConvexDisc, a: int, b: int) -> tuple[int, ...]:
    """Labels strictly between ``a`` and ``b`` walking clockwise from ``a``."""
    out = []
    x = disc.successor(a)
    while x != b:
        out.append(x)
        x = disc.successor(x)
    return tuple(out)


def admissible_partitions(union: PunctureSet, k: int) -> Iterator[tuple[PunctureSet, ...]]:
    """All ordered admissible ``k``-block partitions of ``union``.

    Each cyclic class contributes ``k`` rotations; see :func:`cyclic_classes`
    for one representative each.
    """
    ms = union.members
    m = len(ms)
    if k > m:
        return
    for cuts in itertools.combinations(range(m), k):
        blocks = []
        for t in range(k):
            lo, hi = cuts[t], cuts[(t + 1) % k]
            idx = list(range(lo, hi)) if t < k - 1 else list(range(lo, m)) + list(range(0, hi))
            blocks.append(PunctureSet._trusted(union.disc, tuple(sorted(ms[i] for i in idx))))
        for r in range(k):
            yield tuple(blocks[r:] + blocks[:r])


def cyclic_classes(union: PunctureSet, k: int) -> Iterator[tuple[PunctureSet, ...]]:
    """One admissible partition per cyclic class: the rotation whose first block holds the minimum."""
    lo = union.members[0] if union.members else None
    for parts in admissible_partitions(union, k):
        if lo in parts[0].members:
            yield parts
