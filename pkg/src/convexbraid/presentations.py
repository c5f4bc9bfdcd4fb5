"""The presentations as explicit finite data, plus oracle verification.

Each relation is kept as an equation ``lhs = rhs``; the relator is
``lhs * rhs^-1``.  Chains ``x = y = z`` become two relations, and admissible
triples whose relation instances coincide under cyclic rotation are
enumerated once.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .convex import (
    ConvexDisc,
    PunctureSet,
    admissible_partitions,
    compatible,
    crossing,
    cyclic_classes,
    nested,
)
from .oracle import equal, is_pure
from .smith import smith_invariants
from .words import Band, Generator, Swing, Twist, Word, format_word, parse, rotation, word_of

KINDS = ("rotation", "bkl", "artin", "modified_artin", "twist", "swing", "boundary_swing")


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    tag: str
    binding: tuple = ()

    @property
    def relator(self) -> Word:
        return self.lhs * self.rhs.inverse()


@dataclass(frozen=True)
class Presentation:
    name: str
    n: int
    generators: tuple
    relations: tuple
    notes: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def relators(self) -> list[Word]:
        return [r.relator for r in self.relations]

    @property
    def relation_tags(self) -> list[str]:
        return [r.tag for r in self.relations]

    def count(self, tag: str) -> int:
        return sum(1 for r in self.relations if r.tag == tag)

    def check_invariants(self) -> None:
        gens = set(self.generators)
        for rel in self.relations:
            w = rel.relator
            if not w:
                raise AssertionError(f"empty relator for {rel.tag} {rel.binding}")
            missing = w.generators() - gens
            if missing:
                raise AssertionError(f"relator uses non-generators {sorted(map(str, missing))}")


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts)


def _require_n(n: int) -> ConvexDisc:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"presentations need n >= 2, got {n!r}")
    return ConvexDisc(n)


def _g(g: Generator) -> Word:
    return word_of(g)


def _commute(a: Generator | Word, b: Generator | Word, tag: str, binding: tuple) -> Relation:
    a = a if isinstance(a, Word) else _g(a)
    b = b if isinstance(b, Word) else _g(b)
    return Relation(a * b, b * a, tag, binding)


def _sorted_gens(gens: Iterable[Generator]) -> tuple:
    return tuple(sorted(gens, key=lambda g: g.sort_key()))


def _pairs(disc: ConvexDisc) -> list[PunctureSet]:
    return list(disc.subsets(2, 2))


def _ps(disc: ConvexDisc, *labels: int) -> PunctureSet:
    return PunctureSet(disc, labels)


def rotation_presentation(n: int) -> Presentation:
    disc = _require_n(n)
    sets = list(disc.subsets(2))
    gens = _sorted_gens(rotation(b) for b in sets)
    rels = []
    for b, c in itertools.combinations(sets, 2):
        if b.isdisjoint(c) and not crossing(b, c):
            rels.append(_commute(rotation(b), rotation(c), "non-crossing commute", (b, c)))
    for union in disc.subsets(3):
        for i_set, b, c in admissible_partitions(union, 3):
            if len(i_set) != 1:
                continue
            lhs = _g(rotation(i_set | b)) * _g(rotation(i_set | c))
            rels.append(Relation(lhs, _g(rotation(union)), "factorization", (i_set, b, c)))
    return Presentation("rotation", n, gens, tuple(rels))


def bkl_presentation(n: int) -> Presentation:
    disc = _require_n(n)
    pairs = _pairs(disc)
    gens = _sorted_gens(Band(*p.members) for p in pairs)
    rels = []
    for p, q in itertools.combinations(pairs, 2):
        if p.isdisjoint(q) and not crossing(p, q):
            rels.append(_commute(Band(*p.members), Band(*q.members), "non-crossing commute", (p, q)))
    for i, j, k in itertools.combinations(disc.labels, 3):
        rij, rik, rjk = _g(Band(i, j)), _g(Band(i, k)), _g(Band(j, k))
        b = (_ps(disc, i), _ps(disc, j), _ps(disc, k))
        rels.append(Relation(rij * rik, rik * rjk, "triangle", b))
        rels.append(Relation(rik * rjk, rjk * rij, "triangle", b))
    return Presentation("bkl", n, gens, tuple(rels))


def _swing2(disc: ConvexDisc) -> Callable[[int, int], Word]:
    def s(a: int, b: int) -> Word:
        return _g(Swing(_ps(disc, a, b)))

    return s


def artin_presentation(n: int) -> Presentation:
    """Artin's original presentation with the linear order 1 < 2 < ... < n."""
    disc = _require_n(n)
    S = _swing2(disc)
    gens = _sorted_gens(Swing(p) for p in _pairs(disc))
    rels = []
    labels = disc.labels
    for r, s in itertools.combinations(labels, 2):
        for i, j in itertools.combinations(labels, 2):
            lhs = S(r, s).inverse() * S(i, j) * S(r, s)
            if r < s < i < j:
                rels.append(Relation(lhs, S(i, j), "artin-1", (r, s, i, j)))
            elif i < r < s < j:
                rels.append(Relation(lhs, S(i, j), "artin-2", (r, s, i, j)))
            elif r < i == s < j:
                c = S(r, j)
                rels.append(Relation(lhs, c * S(i, j) * c.inverse(), "artin-3", (r, s, i, j)))
            elif r == i < s < j:
                c = S(i, j) * S(s, j)
                rels.append(Relation(lhs, c * S(i, j) * c.inverse(), "artin-4", (r, s, i, j)))
            elif r < i < s < j:
                c = S(r, j) * S(s, j) * S(r, j).inverse() * S(s, j).inverse()
                rels.append(Relation(lhs, c * S(i, j) * c.inverse(), "artin-5", (r, s, i, j)))
    return Presentation("artin", n, gens, tuple(rels))


def modified_artin_presentation(n: int) -> Presentation:
    disc = _require_n(n)
    S = _swing2(disc)
    pairs = _pairs(disc)
    gens = _sorted_gens(Swing(p) for p in pairs)
    rels = []
    for p, q in itertools.combinations(pairs, 2):
        if p.isdisjoint(q) and not crossing(p, q):
            rels.append(_commute(Swing(p), Swing(q), "non-crossing commute", (p, q)))
    # roles read clockwise from the smallest label: r, i, s, j
    for r, i, s, j in itertools.combinations(disc.labels, 4):
        conj = S(j, s) * S(r, s) * S(j, s).inverse()
        rels.append(_commute(S(i, j), conj, "crossing commute", (r, i, s, j)))
    for r, s, j in itertools.combinations(disc.labels, 3):
        a = S(s, j) * S(r, s) * S(r, j)
        b = S(r, s) * S(r, j) * S(s, j)
        c = S(r, j) * S(s, j) * S(r, s)
        rels.append(Relation(a, b, "triangle", (r, s, j)))
        rels.append(Relation(b, c, "triangle", (r, s, j)))
    return Presentation("modified_artin", n, gens, tuple(rels))


def convex_twists(disc: ConvexDisc) -> list[Twist]:
    out = []
    for union in disc.subsets(2):
        for b, c in cyclic_classes(union, 2):
            out.append(Twist(b, c))
    return list(_sorted_gens(out))


def twist_presentation(n: int) -> Presentation:
    disc = _require_n(n)
    gens = convex_twists(disc)
    rels = []
    nested_rels = []
    overlap = 0
    for t, u in itertools.combinations(gens, 2):
        bc, de = t.union, u.union
        apart = bc.isdisjoint(de) and not crossing(bc, de)
        inside = nested((t.b, t.c), (u.b, u.c))
        overlap += apart and inside
        if apart:
            rels.append(_commute(t, u, "non-crossing commute", (t, u)))
        if inside:
            nested_rels.append(_commute(t, u, "nested commute", (t, u)))
    rels.extend(nested_rels)
    for union in disc.subsets(3):
        for b, c, d in admissible_partitions(union, 3):
            lhs = _g(Twist(b, c)) * _g(Twist(b, d))
            rels.append(Relation(lhs, _g(Twist(b, c | d)), "factorization", (b, c, d)))
    return Presentation("twist", n, tuple(gens), tuple(rels), {"commute_overlap": overlap})


def lantern(b: PunctureSet, c: PunctureSet, d: PunctureSet, boundary: bool = False) -> Relation:
    """S_BCD S_B S_C S_D = S_CB S_BD S_DC (boundary variant puts S_BCD last)."""
    big, sb, sc, sd = (_g(Swing(x)) for x in (b | c | d, b, c, d))
    lhs = sb * sc * sd * big if boundary else big * sb * sc * sd
    rhs = _g(Swing(c | b)) * _g(Swing(b | d)) * _g(Swing(d | c))
    return Relation(lhs, rhs, "lantern", (b, c, d))


def _swing_relations(disc: ConvexDisc, trivial: bool, boundary: bool) -> list[Relation]:
    sets = list(disc.subsets(1))
    rels = []
    if trivial:
        for b in disc.subsets(1, 1):
            rels.append(Relation(_g(Swing(b)), Word(), "triviality", (b,)))
    for b, c in itertools.combinations(sets, 2):
        if compatible(b, c):
            rels.append(_commute(Swing(b), Swing(c), "compatible commute", (b, c)))
    for union in disc.subsets(3):
        for b, c, d in cyclic_classes(union, 3):
            rels.append(lantern(b, c, d, boundary))
    return rels


def swing_presentation(n: int) -> Presentation:
    disc = _require_n(n)
    gens = _sorted_gens(Swing(b) for b in disc.subsets(1))
    return Presentation("swing", n, gens, tuple(_swing_relations(disc, True, False)))


def boundary_swing_presentation(n: int) -> Presentation:
    """Punctures replaced by boundary circles: no triviality relations."""
    disc = _require_n(n)
    gens = _sorted_gens(Swing(b) for b in disc.subsets(1))
    return Presentation(
        "boundary_swing", n, gens, tuple(_swing_relations(disc, False, True)),
        {"quotient_check": "verified with S_i trivial; a necessary condition only"},
    )


BUILDERS: dict[str, Callable[[int], Presentation]] = {
    "rotation": rotation_presentation,
    "bkl": bkl_presentation,
    "artin": artin_presentation,
    "modified_artin": modified_artin_presentation,
    "twist": twist_presentation,
    "swing": swing_presentation,
    "boundary_swing": boundary_swing_presentation,
}


def build(kind: str, n: int) -> Presentation:
    try:
        builder = BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown presentation {kind!r}; choose from {', '.join(KINDS)}") from None
    return builder(n)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class RelatorResult:
    index: int
    tag: str
    relator: str
    pure: bool
    holds: bool

    @property
    def ok(self) -> bool:
        return self.pure and self.holds


@dataclass
class VerificationReport:
    name: str
    n: int
    results: list[RelatorResult]
    notes: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[RelatorResult]:
        return [r for r in self.results if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.failed

    def summary(self) -> str:
        line = f"{self.name} n={self.n}: relators: {len(self.results)}, failed: {len(self.failed)}"
        for key, val in self.notes.items():
            line += f"\n  {key}: {val}"
        return line


def _check_chunk(args) -> list[tuple[bool, bool]]:
    n, pairs = args
    out = []
    for lhs, rhs in pairs:
        rel = lhs * rhs.inverse()
        out.append((is_pure(rel, n), equal(lhs, rhs, n)))
    return out


def verify_presentation(p: Presentation, jobs: int | None = None) -> VerificationReport:
    """Check every relator with the free-group oracle.

    Work may fan out over ``jobs`` processes; results stay in relator order.
    """
    pairs = [(r.lhs, r.rhs) for r in p.relations]
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(pairs) < 64:
        flags = _check_chunk((p.n, pairs))
    else:
        size = max(1, len(pairs) // (jobs * 4))
        chunks = [(p.n, pairs[k:k + size]) for k in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = [f for part in pool.map(_check_chunk, chunks) for f in part]
    results = [
        RelatorResult(k, rel.tag, format_word(rel.relator), pure, holds)
        for k, (rel, (pure, holds)) in enumerate(zip(p.relations, flags))
    ]
    return VerificationReport(p.name, p.n, results, dict(p.notes))


# -- abelianization ----------------------------------------------------------


def relation_matrix(p: Presentation) -> list[list[int]]:
    index = {g: k for k, g in enumerate(p.generators)}
    rows = []
    for w in p.relators:
        row = [0] * len(index)
        for g, e in w:
            row[index[g]] += e
        rows.append(row)
    return rows


def abelianize(p: Presentation) -> AbelianInvariants:
    rank, factors = smith_invariants(relation_matrix(p), len(p.generators))
    return AbelianInvariants(len(p.generators) - rank, tuple(f for f in factors if f > 1))


# -- export ------------------------------------------------------------------


def to_structured(p: Presentation) -> dict:
    return {
        "name": p.name,
        "n": p.n,
        "generators": [str(g) for g in p.generators],
        "relators": [format_word(w) for w in p.relators],
        "tags": p.relation_tags,
    }


def to_json(p: Presentation) -> str:
    return json.dumps(to_structured(p), indent=2)


def to_text(p: Presentation) -> str:
    lines = [f"{p.name} n={p.n}", "gens:"]
    lines += [f"  {g}" for g in p.generators]
    lines.append("rels:")
    lines += [f"  {format_word(w)}" for w in p.relators]
    return "\n".join(lines) + "\n"


def read_structured(doc: dict) -> tuple[str, int, list[Word], list[Word], list[str]]:
    """Parse an exported document back into words."""
    n = doc["n"]
    gens = [parse(s, n) for s in doc["generators"]]
    rels = [parse(s, n) for s in doc["relators"]]
    return doc["name"], n, gens, rels, list(doc["tags"])


def read_text(text: str) -> tuple[str, int, list[Word], list[Word]]:
    lines = text.splitlines()
    name, size = lines[0].split()
    n = int(size.removeprefix("n="))
    k = lines.index("rels:")
    gens = [parse(s.strip(), n) for s in lines[2:k]]
    rels = [parse(s.strip(), n) for s in lines[k + 1:]]
    return name, n, gens, rels


def presentation_map(names: Sequence[str], n: int) -> dict[str, Presentation]:
    return {k: build(k, n) for k in names}
