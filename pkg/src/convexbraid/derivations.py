"""Replaying rewriting proofs step by step.

A script manipulates an equation ``lhs = rhs`` between free words.  Steps are
explicit: substitute one side of a relation instance for the other at a
position, or multiply both sides by a factor.  Commutations that a written
proof would make silently are separate steps here, each backed by a
commutation relation.

A substitution may match only a slice ``P[a:b]`` of the pattern
``P = P1 P[a:b] P2``.  The slice is then replaced by ``P1^-1 Q P2^-1``, which is
how a word that has already lost letters to free cancellation can still be
rewritten.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from dataclasses import dataclass, replace
from typing import Callable, Iterator

from .convex import (
    ConvexDisc,
    PunctureSet,
    admissible_partitions,
    arc_between,
    compatible,
    crossing,
    nested,
)
from .expand import twist_to_swings
from .oracle import equal
from .presentations import (
    Presentation,
    artin_presentation,
    convex_twists,
    lantern,
    modified_artin_presentation,
    swing_presentation,
    twist_presentation,
)
from .words import Swing, Twist, Word, format_word, parse, word_of


class StepError(ValueError):
    pass


@dataclass(frozen=True)
class RelationInstance:
    """A concrete relation ``lhs = rhs``, checked by the oracle when built."""

    source: str
    tag: str
    lhs: Word
    rhs: Word
    n: int
    binding: tuple = ()

    def __post_init__(self) -> None:
        if not equal(self.lhs, self.rhs, self.n):
            raise ValueError(
                f"{self.source}/{self.tag} instance does not hold: "
                f"{format_word(self.lhs)} = {format_word(self.rhs)}"
            )

    def flipped(self) -> "RelationInstance":
        return replace(self, lhs=self.rhs, rhs=self.lhs)


@dataclass(frozen=True)
class Equation:
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass(frozen=True)
class Step:
    mode: str  # "substitute" | "left-multiply" | "right-multiply"
    side: str = "both"  # "lhs" | "rhs" | "both"
    relation: RelationInstance | None = None
    direction: str = "forward"  # forward rewrites relation.lhs -> relation.rhs
    position: int = 0
    match: tuple[int, int] | None = None  # slice of the pattern matched literally
    factor: Word | None = None


def _pattern(step: Step) -> tuple[Word, Word]:
    rel = step.relation
    if rel is None:
        raise StepError("substitution without a relation")
    if step.direction == "forward":
        return rel.lhs, rel.rhs
    if step.direction == "backward":
        return rel.rhs, rel.lhs
    raise StepError(f"unknown direction {step.direction!r}")


def apply_step(w: Word, step: Step) -> Word:
    """Apply one step to one word; the result is freely reduced."""
    if step.mode == "left-multiply":
        return step.factor * w
    if step.mode == "right-multiply":
        return w * step.factor
    if step.mode != "substitute":
        raise StepError(f"unknown mode {step.mode!r}")
    pattern, replacement = _pattern(step)
    a, b = step.match if step.match is not None else (0, len(pattern))
    if not 0 <= a < b <= len(pattern):
        raise StepError(f"bad pattern slice {a}:{b}")
    piece = pattern.letters[a:b]
    pos = step.position
    if pos < 0 or pos + len(piece) > len(w):
        raise StepError(f"position {pos} out of range for a word of length {len(w)}")
    if w.letters[pos:pos + len(piece)] != piece:
        raise StepError(
            f"pattern {format_word(Word(piece))} not found at position {pos} of {format_word(w)}"
        )
    head, tail = pattern[:a], pattern[b:]
    middle = head.inverse() * replacement * tail.inverse()
    return Word(w.letters[:pos] + middle.letters + w.letters[pos + len(piece):])


def apply_to_equation(eq: Equation, step: Step) -> Equation:
    if step.side not in ("lhs", "rhs", "both"):
        raise StepError(f"unknown side {step.side!r}")
    if step.mode == "substitute" and step.side == "both":
        raise StepError("substitutions act on one side at a time")
    if step.mode != "substitute" and step.side != "both":
        raise StepError("multiplications act on both sides")
    lhs = apply_step(eq.lhs, step) if step.side in ("lhs", "both") else eq.lhs
    rhs = apply_step(eq.rhs, step) if step.side in ("rhs", "both") else eq.rhs
    return Equation(lhs, rhs)


@dataclass(frozen=True)
class RewriteScript:
    name: str
    n: int
    binding: tuple
    start: RelationInstance
    steps: tuple[Step, ...]
    goal: Equation


@dataclass
class ScriptReport:
    name: str
    binding: tuple
    passed: bool
    steps_applied: int
    error: str = ""
    final: Equation | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        b = " ".join(map(_binding_str, self.binding))
        msg = f"{status} {self.name} [{b}] steps={self.steps_applied}"
        return msg + (f" : {self.error}" if self.error else "")


def check_script(s: RewriteScript, debug: bool = True) -> ScriptReport:
    """Replay ``s``.  In debug mode every intermediate equation is oracle-checked."""
    eq = Equation(s.start.lhs, s.start.rhs)
    done = 0
    try:
        for step in s.steps:
            new = apply_to_equation(eq, step)
            if debug:
                if step.mode == "substitute":
                    before = eq.lhs if step.side == "lhs" else eq.rhs
                    after = new.lhs if step.side == "lhs" else new.rhs
                    if not equal(before, after, s.n):
                        raise StepError(f"step {done} changed the element")
                if not equal(new.lhs, new.rhs, s.n):
                    raise StepError(f"equation fails after step {done}")
            eq = new
            done += 1
    except StepError as exc:
        return ScriptReport(s.name, s.binding, False, done, str(exc), eq)
    if eq != s.goal:
        return ScriptReport(s.name, s.binding, False, done, f"ended at {eq}, wanted {s.goal}", eq)
    if not equal(s.goal.lhs, s.goal.rhs, s.n):
        return ScriptReport(s.name, s.binding, False, done, "goal fails the oracle", eq)
    return ScriptReport(s.name, s.binding, True, done, "", eq)


# -- building scripts ----------------------------------------------------------


class _Builder:
    def __init__(self, n: int, start: RelationInstance):
        self.n = n
        self.start = start
        self.eq = Equation(start.lhs, start.rhs)
        self.steps: list[Step] = []

    def _do(self, step: Step) -> None:
        self.eq = apply_to_equation(self.eq, step)
        self.steps.append(step)

    def side(self, name: str) -> Word:
        return self.eq.lhs if name == "lhs" else self.eq.rhs

    def multiply(self, where: str, factor: Word) -> None:
        self._do(Step(f"{where}-multiply", "both", factor=factor))

    def substitute(self, side: str, rel: RelationInstance, direction: str = "forward",
                   position: int | None = None) -> None:
        pattern = rel.lhs if direction == "forward" else rel.rhs
        w = self.side(side)
        if position is None:
            position = _find(w, pattern)
        if position is None:
            best = max(range(len(w)), key=lambda i: (_prefix_match(w, pattern, i), -i), default=0)
            position = best
        m = _prefix_match(w, pattern, position)
        if m == 0:
            raise StepError(f"{format_word(pattern)} not at {position} in {format_word(w)}")
        match = None if m == len(pattern) else (0, m)
        self._do(Step("substitute", side, rel, direction, position, match))

    def swap(self, side: str, pos: int, commute: Callable[[Word, Word], RelationInstance]) -> None:
        w = self.side(side)
        x, y = w[pos:pos + 1], w[pos + 1:pos + 2]
        self._do(Step("substitute", side, commute(x, y), "forward", pos))

    def rearrange(self, side: str, target: Word,
                  commute: Callable[[Word, Word], RelationInstance]) -> None:
        """Reach ``target`` by adjacent commutations (letters may cancel on the way)."""
        for _ in range(10_000):
            w = self.side(side).letters
            t = target.letters
            if w == t:
                return
            k = next((i for i in range(min(len(w), len(t))) if w[i] != t[i]), min(len(w), len(t)))
            j = None
            if k < len(t):
                j = next((i for i in range(k + 1, len(w)) if w[i] == t[k]), None)
            if j is None and k < len(w):
                g, e = w[k]
                j = next((i for i in range(k + 2, len(w)) if w[i] == (g, -e)), None)
                if j is not None:
                    self.swap(side, j - 1, commute)
                    continue
            if j is None:
                raise StepError(f"cannot rearrange {format_word(Word(w))} into {format_word(target)}")
            self.swap(side, j - 1, commute)
        raise StepError("rearrangement did not terminate")

    def build(self, name: str, binding: tuple, goal: Equation) -> RewriteScript:
        if self.eq != goal:
            raise StepError(f"{name}: builder ended at {self.eq}, wanted {goal}")
        return RewriteScript(name, self.n, binding, self.start, tuple(self.steps), goal)


def _find(w: Word, pattern: Word) -> int | None:
    p = pattern.letters
    for i in range(len(w) - len(p) + 1):
        if w.letters[i:i + len(p)] == p:
            return i
    return None


def _prefix_match(w: Word, pattern: Word, pos: int) -> int:
    m = 0
    while m < len(pattern) and pos + m < len(w) and w.letters[pos + m] == pattern.letters[m]:
        m += 1
    return m


def _binding_str(x) -> str:
    return repr(x) if isinstance(x, PunctureSet) else str(x)


# -- relation instances used by the bundled scripts ----------------------------


def _ps(n: int, *labels: int) -> PunctureSet:
    return PunctureSet(n, labels)


def _S(n: int, *labels: int) -> Word:
    return word_of(Swing(_ps(n, *labels)))


def _T(b: PunctureSet, c: PunctureSet) -> Word:
    return word_of(Twist(b, c))


def _Tl(n: int, b, c) -> Word:
    b = (b,) if isinstance(b, int) else tuple(b)
    c = (c,) if isinstance(c, int) else tuple(c)
    return _T(_ps(n, *b), _ps(n, *c))


def swing_commute(n: int) -> Callable[[Word, Word], RelationInstance]:
    """x y = y x for single letters on compatible swings."""

    return lambda x, y: _swing_commute(n, x, y)


@lru_cache(maxsize=None)
def _swing_commute(n: int, x: Word, y: Word) -> RelationInstance:
    (g, _), (h, _) = x.letters[0], y.letters[0]
    if not (isinstance(g, Swing) and isinstance(h, Swing)) or not (g == h or compatible(g.b, h.b)):
        raise StepError(f"{format_word(x)} and {format_word(y)} are not compatible swings")
    return RelationInstance("swing", "compatible commute", x * y, y * x, n, (g.b, h.b))


@lru_cache(maxsize=None)
def twist_as_swings(b: PunctureSet, c: PunctureSet, n: int, order: tuple[int, int, int] = (0, 1, 2)) -> RelationInstance:
    """T_{B,C} = S_B^-1 S_C^-1 S_BC, factors in the given order, trivial swings kept."""
    factors = twist_to_swings(b, c, keep_trivial=True).letters
    rhs = Word(factors[k] for k in order)
    return RelationInstance("twists-as-swings", "T = S_B^-1 S_C^-1 S_BC", _T(b, c), rhs, n, (b, c))


# -- bundled scripts --------------------------------------------------------------


def artin_third(n: int, r: int, s: int, j: int) -> RewriteScript:
    S = lambda *a: _S(n, *a)
    start = RelationInstance("modified_artin", "triangle",
                             S(s, j) * S(r, s) * S(r, j), S(r, s) * S(r, j) * S(s, j), n, (r, s, j))
    bld = _Builder(n, start)
    bld.multiply("left", S(r, s).inverse())
    bld.multiply("right", S(r, j).inverse())
    goal = Equation(S(r, s).inverse() * S(s, j) * S(r, s), S(r, j) * S(s, j) * S(r, j).inverse())
    return bld.build("artin-3rd-from-(3)", (r, s, j), goal)


def artin_fourth(n: int, r: int, s: int, j: int) -> RewriteScript:
    S = lambda *a: _S(n, *a)
    second = RelationInstance("modified_artin", "triangle",
                              S(r, s) * S(r, j) * S(s, j), S(r, j) * S(s, j) * S(r, s), n, (r, s, j))
    first = RelationInstance("modified_artin", "triangle",
                             S(s, j) * S(r, s) * S(r, j), S(r, s) * S(r, j) * S(s, j), n, (r, s, j))
    bld = _Builder(n, second.flipped())
    bld.multiply("right", S(r, j))
    bld.substitute("lhs", first, "forward", 1)
    # A4': S_rj S_rs S_rj S_sj = S_rs S_rj S_sj S_rj
    bld.multiply("left", S(r, s).inverse())
    bld.multiply("right", (S(r, j) * S(s, j)).inverse())
    c = S(r, j) * S(s, j)
    goal = Equation(S(r, s).inverse() * S(r, j) * S(r, s), c * S(r, j) * c.inverse())
    return bld.build("artin-4th-A4'-from-(3)", (r, s, j), goal)


def artin_fifth(n: int, r: int, i: int, s: int, j: int) -> RewriteScript:
    S = lambda *a: _S(n, *a)
    conj = S(j, s) * S(r, s) * S(j, s).inverse()
    start = RelationInstance("modified_artin", "crossing commute",
                             S(i, j) * conj, conj * S(i, j), n, (r, i, s, j))
    first = RelationInstance("modified_artin", "triangle",
                             S(s, j) * S(r, s) * S(r, j), S(r, s) * S(r, j) * S(s, j), n, (r, s, j))
    bld = _Builder(n, start)
    bld.substitute("lhs", first, "forward", 1)
    bld.substitute("rhs", first, "forward", 0)
    c = S(r, j) * S(s, j) * S(r, j).inverse() * S(s, j).inverse()
    bld.multiply("left", S(r, s).inverse())
    bld.multiply("right", c.inverse())
    goal = Equation(S(r, s).inverse() * S(i, j) * S(r, s), c * S(i, j) * c.inverse())
    return bld.build("artin-5th-from-(2)(3)", (r, i, s, j), goal)


def _twist_factor(b: PunctureSet, c: PunctureSet, d: PunctureSet, n: int) -> RelationInstance:
    return RelationInstance("twist", "factorization", _T(b, c) * _T(b, d), _T(b, c | d), n, (b, c, d))


def _nested_commute(x: Word, y: Word, n: int, binding: tuple) -> RelationInstance:
    return RelationInstance("twist", "nested commute", x * y, y * x, n, binding)


def triangles_first(n: int, b: PunctureSet, c: PunctureSet, d: PunctureSet) -> RewriteScript:
    """T_CB T_BD T_DC = T_BD T_DC T_CB, via T_BD T_DC = T_D,BC."""
    start = _nested_commute(_T(c, b), _T(d, b | c), n, (c, b, d, b | c))
    fac = _twist_factor(d, b, c, n)
    bld = _Builder(n, start)
    bld.substitute("lhs", fac, "backward", 1)
    bld.substitute("rhs", fac, "backward", 0)
    goal = Equation(_T(c, b) * _T(b, d) * _T(d, c), _T(b, d) * _T(d, c) * _T(c, b))
    return bld.build("triangles-lemma-first", (b, c, d), goal)


def triangles_second(n: int, b: PunctureSet, c: PunctureSet, d: PunctureSet) -> RewriteScript:
    """T_BD T_DC T_CB = T_DC T_CB T_BD, via T_DC T_CB = T_C,DB."""
    start = _nested_commute(_T(b, d), _T(c, d | b), n, (b, d, c, d | b))
    fac = _twist_factor(c, d, b, n)
    bld = _Builder(n, start)
    bld.substitute("lhs", fac, "backward", 1)
    bld.substitute("rhs", fac, "backward", 0)
    goal = Equation(_T(b, d) * _T(d, c) * _T(c, b), _T(d, c) * _T(c, b) * _T(b, d))
    return bld.build("triangles-lemma-second", (b, c, d), goal)


def twist_rel_second(n: int, r: int, i: int, s: int, j: int) -> RewriteScript:
    """Second modified Artin relation from nested commutation, factorization and a conjugated triangle."""
    T = lambda x, y: _Tl(n, x, y)
    ris = _ps(n, r, i, s)
    pj = _ps(n, j)
    start = _nested_commute(_T(ris, pj), T(r, s), n, (ris, pj, _ps(n, r), _ps(n, s)))
    f1 = _twist_factor(pj, _ps(n, r), _ps(n, i, s), n)
    f2 = _twist_factor(pj, _ps(n, i), _ps(n, s), n)
    three = RelationInstance("triangles", "conjugated triangle",
                             T(s, j) * T(r, s) * T(s, j).inverse(),
                             T(r, j).inverse() * T(r, s) * T(r, j), n, (r, s, j))
    bld = _Builder(n, start)
    bld.substitute("lhs", f1, "backward", 0)
    bld.substitute("lhs", f2, "backward", 1)
    bld.substitute("rhs", f1, "backward", 1)
    bld.substitute("rhs", f2, "backward", 2)
    bld.multiply("left", T(r, j).inverse())
    bld.multiply("right", T(s, j).inverse())
    bld.substitute("rhs", three, "backward", 0)
    x = T(s, j) * T(r, s) * T(s, j).inverse()
    goal = Equation(T(i, j) * x, x * T(i, j))
    return bld.build("twist-rel-second-modified-artin", (r, i, s, j), goal)


_ORDERS = list(itertools.permutations(range(3)))


def swing_rel_commute(n: int, t: Twist, u: Twist) -> RewriteScript:
    """Nested or non-crossing twists commute, using only swing commutations."""
    start = RelationInstance("reflexivity", "w = w", word_of(t, u), word_of(t, u), n, (t, u))
    goal = Equation(word_of(t, u), word_of(u, t))
    commute = swing_commute(n)
    last: Exception | None = None
    xs = [twist_as_swings(t.b, t.c, n, o) for o in _ORDERS]
    ys = [twist_as_swings(u.b, u.c, n, o) for o in _ORDERS]
    for y2, x2 in itertools.product(ys, xs):
        target = y2.rhs * x2.rhs
        if _mixed_signs(target):
            continue
        # the fold back does not depend on the route, so test it first
        probe = _Builder(n, start)
        probe.eq = Equation(target, target)
        try:
            probe.substitute("rhs", y2, "backward", 0)
            probe.substitute("rhs", x2, "backward")
        except StepError:
            continue
        if probe.eq.rhs != goal.rhs:
            continue
        want = sorted(map(_key, target.letters))
        for x, y in itertools.product(xs, ys):
            if sorted(map(_key, (x.rhs * y.rhs).letters)) != want:
                continue  # a generator with both signs would cancel while bubbling
            try:
                bld = _Builder(n, start)
                bld.substitute("rhs", x, "forward", 0)
                bld.substitute("rhs", y, "forward")
                bld.rearrange("rhs", target, commute)
                bld.substitute("rhs", y2, "backward", 0)
                bld.substitute("rhs", x2, "backward")
                return bld.build("swing-rel-nested-noncrossing", (t, u), goal)
            except StepError as exc:
                last = exc
    raise StepError(f"no commutation route for {t} and {u}: {last}")


def _mixed_signs(w: Word) -> bool:
    signs: dict = {}
    return any(signs.setdefault(g, e) != e for g, e in w)


def _key(letter) -> tuple:
    g, e = letter
    return (g.sort_key(), e)


def lantern_to_factorization(n: int, b: PunctureSet, c: PunctureSet, d: PunctureSet) -> RewriteScript:
    """T_B,CD = T_B,C T_B,D from the lantern relation and swing commutations."""
    commute = swing_commute(n)
    sw = lambda x: word_of(Swing(x))
    rotations = [(b, c, d), (c, d, b), (d, b, c)]
    lo = min((b | c | d).members)
    rep = next(k for k, trip in enumerate(rotations) if lo in trip[0].members)
    lan = lantern(*rotations[rep])
    start = RelationInstance("swing", "lantern", lan.lhs, lan.rhs, n, rotations[rep])
    bld = _Builder(n, start)
    x, z = sw(b | c), sw(c | d)
    if rep == 1:  # rhs is z x y
        bld.multiply("left", z.inverse())
        bld.multiply("right", z)
    elif rep == 2:  # rhs is y z x
        bld.multiply("left", x)
        bld.multiply("right", x.inverse())
    sB, sC, sD, big = sw(b), sw(c), sw(d), sw(b | c | d)
    bld.rearrange("lhs", big * sB * sC * sD, commute)
    # S_BCD S_B S_C S_D = S_BC S_BD S_CD
    bld.multiply("right", z.inverse() * sB.inverse() * sB.inverse() * sC.inverse() * sD.inverse())
    t_bcd = twist_as_swings(b, c | d, n)
    t_bc, t_bd = twist_as_swings(b, c, n), twist_as_swings(b, d, n)
    bld.rearrange("lhs", t_bcd.rhs, commute)
    bld.rearrange("rhs", t_bc.rhs * t_bd.rhs, commute)
    bld.substitute("lhs", t_bcd, "backward", 0)
    bld.substitute("rhs", t_bc, "backward", 0)
    bld.substitute("rhs", t_bd, "backward", 1)
    goal = Equation(_T(b, c | d), _T(b, c) * _T(b, d))
    return bld.build("lantern-implies-twist-factorization", (b, c, d), goal)


def _ordered_triples(n: int) -> Iterator[tuple]:
    disc = ConvexDisc(n)
    for union in disc.subsets(3):
        yield from admissible_partitions(union, 3)


def _commuting_twist_pairs(n: int) -> Iterator[tuple]:
    for t, u in itertools.combinations(convex_twists(ConvexDisc(n)), 2):
        bc, de = t.union, u.union
        if (bc.isdisjoint(de) and not crossing(bc, de)) or nested((t.b, t.c), (u.b, u.c)):
            yield (t, u)


def _cyclic_quads(n: int) -> Iterator[tuple]:
    for quad in itertools.combinations(range(1, n + 1), 4):
        for k in range(4):
            yield quad[k:] + quad[:k]


SCRIPTS: dict[str, tuple[Callable, Callable]] = {
    "artin-3rd-from-(3)": (lambda n: itertools.combinations(range(1, n + 1), 3), artin_third),
    "artin-4th-A4'-from-(3)": (lambda n: itertools.combinations(range(1, n + 1), 3), artin_fourth),
    "artin-5th-from-(2)(3)": (lambda n: itertools.combinations(range(1, n + 1), 4), artin_fifth),
    "triangles-lemma-first": (_ordered_triples, triangles_first),
    "triangles-lemma-second": (_ordered_triples, triangles_second),
    "twist-rel-second-modified-artin": (_cyclic_quads, twist_rel_second),
    "swing-rel-nested-noncrossing": (_commuting_twist_pairs, swing_rel_commute),
    "lantern-implies-twist-factorization": (_ordered_triples, lantern_to_factorization),
}


def bundled(name: str, n: int) -> Iterator[RewriteScript]:
    """Every instance of a bundled script on ``n`` punctures."""
    try:
        bindings, make = SCRIPTS[name]
    except KeyError:
        raise KeyError(f"no bundled script {name!r}") from None
    for binding in bindings(n):
        yield make(n, *binding)


# -- start instances against the presentations ------------------------------------


def instance_in(inst: RelationInstance, p: Presentation) -> bool:
    """Whether the instance is a relation of ``p`` (either orientation)."""
    pairs = {(r.lhs, r.rhs) for r in p.relations}
    return (inst.lhs, inst.rhs) in pairs or (inst.rhs, inst.lhs) in pairs


SOURCES: dict[str, Callable[[int], Presentation]] = {
    "modified_artin": modified_artin_presentation,
    "twist": twist_presentation,
    "swing": swing_presentation,
    "artin": artin_presentation,
}


# -- constructive witnesses ---------------------------------------------------------


def central_witness(i: int, j: int, n: int) -> Word:
    """U with S_ij U = U S_ij = S_A, following the three cases of the centrality argument."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"need distinct labels in 1..{n}, got ({i}, {j})")
    disc = ConvexDisc(n)
    ij = _ps(n, i, j)
    if n == 2:
        return Word()
    if disc.successor(j) == i:
        i, j = j, i
    if disc.successor(i) == j:
        b = PunctureSet(n, arc_between(disc, j, i))
        return word_of(Swing(b), Twist(ij, b))
    b = PunctureSet(n, arc_between(disc, i, j))
    c = PunctureSet(n, arc_between(disc, j, i))
    return word_of(Swing(b), Swing(c), Twist(ij, c), Twist(b, ij | c))


def verify_central_witness(i: int, j: int, n: int) -> bool:
    s_ij = _S(n, i, j)
    s_a = word_of(Swing(PunctureSet(n, range(1, n + 1))))
    u = central_witness(i, j, n)
    return equal(s_ij * u, s_a, n) and equal(u * s_ij, s_a, n)


def swing_as_twists(b: PunctureSet) -> Word:
    """S_B as convex twists: split off the first member, S_B = S_b1 S_rest T_b1,rest."""
    if not len(b):
        raise ValueError("swing over an empty set")
    if len(b) == 1:
        return Word()
    head = PunctureSet(b.disc, b.members[:1])
    rest = PunctureSet(b.disc, b.members[1:])
    return swing_as_twists(rest) * word_of(Twist(head, rest))


def twists_to_swings(w: Word) -> Word:
    """Replace every twist letter by its swing form."""
    out = []
    for g, e in w:
        part = twist_to_swings(g.b, g.c) if isinstance(g, Twist) else word_of(g)
        out.extend(part.letters if e > 0 else part.inverse().letters)
    return Word(out)


# -- serialization -------------------------------------------------------------------


def _bind_doc(binding: tuple) -> list:
    return [_binding_str(x) for x in binding]


def _instance_doc(rel: RelationInstance) -> dict:
    return {
        "source": rel.source,
        "relation_tag": rel.tag,
        "binding": _bind_doc(rel.binding),
        "lhs": format_word(rel.lhs),
        "rhs": format_word(rel.rhs),
    }


def script_to_document(s: RewriteScript) -> dict:
    steps = []
    for st in s.steps:
        d: dict = {"mode": st.mode, "side": st.side, "position": st.position}
        if st.relation is not None:
            d.update(_instance_doc(st.relation))
            d["direction"] = "lhs->rhs" if st.direction == "forward" else "rhs->lhs"
        if st.match is not None:
            d["match"] = list(st.match)
        if st.factor is not None:
            d["factor"] = format_word(st.factor)
        steps.append(d)
    return {
        "name": s.name,
        "n": s.n,
        "binding": _bind_doc(s.binding),
        "start": _instance_doc(s.start),
        "steps": steps,
        "goal": {"lhs": format_word(s.goal.lhs), "rhs": format_word(s.goal.rhs)},
    }


def _instance_from(doc: dict, n: int) -> RelationInstance:
    return RelationInstance(doc["source"], doc["relation_tag"], parse(doc["lhs"], n),
                            parse(doc["rhs"], n), n, tuple(doc.get("binding", ())))


def script_from_document(doc: dict) -> RewriteScript:
    """Rebuild a script; every relation instance is re-checked by the oracle."""
    n = doc["n"]
    steps = []
    for d in doc["steps"]:
        rel = _instance_from(d, n) if "lhs" in d else None
        direction = "backward" if d.get("direction") == "rhs->lhs" else "forward"
        steps.append(Step(
            d["mode"], d.get("side", "both"), rel, direction, int(d.get("position", 0)),
            tuple(d["match"]) if "match" in d else None,
            parse(d["factor"], n) if "factor" in d else None,
        ))
    goal = Equation(parse(doc["goal"]["lhs"], n), parse(doc["goal"]["rhs"], n))
    return RewriteScript(doc["name"], n, tuple(doc.get("binding", ())),
                         _instance_from(doc["start"], n), tuple(steps), goal)


def dump_script(s: RewriteScript) -> str:
    return json.dumps(script_to_document(s), indent=2)
