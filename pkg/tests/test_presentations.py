import json
from dataclasses import replace
from math import comb
from pathlib import Path

import pytest

import oracles
from convexbraid.convex import PunctureSet
from convexbraid.oracle import is_pure
from convexbraid.presentations import (
    KINDS,
    Presentation,
    Relation,
    abelianize,
    artin_presentation,
    bkl_presentation,
    boundary_swing_presentation,
    build,
    modified_artin_presentation,
    read_structured,
    read_text,
    relation_matrix,
    rotation_presentation,
    swing_presentation,
    to_json,
    to_structured,
    to_text,
    twist_presentation,
    verify_presentation,
)
from convexbraid.words import Swing, Twist, Word, parse, word_of

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen.json").read_text())


def ps(n, *labels):
    return PunctureSet(n, labels)


def has_relation(p, lhs, rhs):
    pairs = {(r.lhs, r.rhs) for r in p.relations}
    return (lhs, rhs) in pairs or (rhs, lhs) in pairs


@pytest.mark.parametrize("n", range(2, 8))
def test_generator_counts(n):
    assert len(rotation_presentation(n).generators) == FROZEN["rotation_generators"][str(n)]
    assert len(swing_presentation(n).generators) == FROZEN["swing_generators"][str(n)]
    assert len(twist_presentation(n).generators) == FROZEN["twist_generators"][str(n)]
    assert len(bkl_presentation(n).generators) == comb(n, 2)


def test_twist_generators_match_geometry():
    got = sorted(tuple(sorted((t.b.members, t.c.members))) for t in twist_presentation(4).generators)
    assert [list(map(list, p)) for p in got] == FROZEN["twist_pairs_4"]


def test_rotation_small():
    p = rotation_presentation(3)
    assert len(p.generators) == 4
    assert p.count("factorization") == 3
    assert p.count("non-crossing commute") == 0
    n = 8
    big = rotation_presentation(n)
    i, b, c = ps(n, 4), ps(n, 5, 6, 7), ps(n, 8, 1, 2, 3)
    from convexbraid.words import rotation
    assert has_relation(big, word_of(rotation(i | b), rotation(i | c)), word_of(rotation(i | b | c)))


def test_bkl_small():
    p = bkl_presentation(3)
    assert (len(p.generators), p.count("non-crossing commute"), p.count("triangle")) == (3, 0, 2)
    q = bkl_presentation(4)
    assert len(q.generators) == 6
    assert q.count("non-crossing commute") == 2


def test_artin_small():
    p = artin_presentation(2)
    assert len(p.generators) == 1 and not p.relations
    tags = set(artin_presentation(3).relation_tags)
    assert tags == {"artin-3", "artin-4"}
    n = 4
    S = lambda a, b: word_of(Swing(ps(n, a, b)))
    r, i, s, j = 1, 2, 3, 4
    c = S(r, j) * S(s, j) * S(r, j).inverse() * S(s, j).inverse()
    assert has_relation(artin_presentation(4), S(r, s).inverse() * S(i, j) * S(r, s), c * S(i, j) * c.inverse())


def test_modified_artin_small():
    p = modified_artin_presentation(3)
    assert p.count("non-crossing commute") == p.count("crossing commute") == 0
    assert p.count("triangle") == 2
    n = 4
    S = lambda a, b: word_of(Swing(ps(n, a, b)))
    q = modified_artin_presentation(n)
    assert has_relation(q, S(1, 2) * S(3, 4), S(3, 4) * S(1, 2))
    conj = S(4, 3) * S(1, 3) * S(4, 3).inverse()
    assert has_relation(q, S(2, 4) * conj, conj * S(2, 4))


def test_twist_examples():
    n = 8
    p = twist_presentation(n)
    b, c, d = ps(n, 4, 5, 6), ps(n, 7, 8, 1), ps(n, 2, 3)
    assert has_relation(p, word_of(Twist(b, c), Twist(b, d)), word_of(Twist(b, c | d)))
    x = Twist(ps(n, 7, 8, 1, 2, 3), ps(n, 4, 5, 6))
    y = Twist(ps(n, 7, 1), ps(n, 2, 3))
    assert has_relation(p, word_of(x, y), word_of(y, x))
    assert p.notes["commute_overlap"] == 0


def test_swing_examples():
    p = swing_presentation(3)
    assert len(p.generators) == 7 and p.count("triviality") == 3
    n = 3
    lhs = parse("S{1,2,3} S{1} S{2} S{3}", n)
    rhs = parse("S{1,2} S{1,3} S{2,3}", n)
    assert has_relation(p, lhs, rhs)
    assert has_relation(p, parse("S{1,2} S{1,2,3}", n), parse("S{1,2,3} S{1,2}", n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_boundary_swing(n):
    q, p = boundary_swing_presentation(n), swing_presentation(n)
    assert q.count("triviality") == 0
    assert len(q.relations) == len(p.relations) - n
    assert "quotient_check" in verify_presentation(q, jobs=1).notes


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_invariants_and_purity(n):
    for kind in KINDS:
        p = build(kind, n)
        p.check_invariants()
        for w in p.relators:
            assert w and is_pure(w, n)
        assert p == build(kind, n)


@pytest.mark.parametrize("n", range(3, 7))
def test_no_duplicate_swing_relators(n):
    rels = swing_presentation(n).relators
    assert len(rels) == len(set(rels))


def test_builders_reject_small_n():
    for kind in KINDS:
        with pytest.raises(ValueError):
            build(kind, 1)
    with pytest.raises(ValueError):
        build("nonsense", 4)


def test_verify_twist_and_swing():
    assert verify_presentation(twist_presentation(4), jobs=1).passed
    rep = verify_presentation(swing_presentation(5), jobs=2)
    assert rep.passed and "failed: 0" in rep.summary()


def test_corrupted_relator_fails_once():
    p = swing_presentation(4)
    extra = word_of(Swing(ps(4, 1, 2)))
    rels = list(p.relations)
    rels[10] = replace(rels[10], lhs=rels[10].lhs * extra)
    bad = replace(p, relations=tuple(rels))
    rep = verify_presentation(bad, jobs=1)
    assert [r.index for r in rep.failed] == [10]


def test_parallel_report_order_is_canonical():
    p = twist_presentation(5)
    a = verify_presentation(p, jobs=1)
    b = verify_presentation(p, jobs=3)
    assert a.results == b.results


@pytest.mark.parametrize("n", [3, 4, 5])
def test_abelianization_frozen(n):
    for kind, (rank, torsion) in FROZEN["expected_abelian"][str(n)].items():
        inv = abelianize(build(kind, n))
        assert (inv.free_rank, list(inv.torsion)) == (rank, torsion), kind


@pytest.mark.parametrize("kind", KINDS)
def test_abelianization_matches_sympy(kind):
    p = build(kind, 4)
    ours = abelianize(p)
    assert (ours.free_rank, list(ours.torsion)) == oracles.sympy_invariants(relation_matrix(p), len(p.generators))


def test_abelianization_torsion_fixture():
    g = Swing(ps(3, 1, 2))
    p = Presentation("toy", 3, (g,), (Relation(word_of(g) ** 2, Word(), "toy"),))
    inv = abelianize(p)
    assert (inv.free_rank, inv.torsion) == (0, (2,))
    assert str(inv) == "Z^0 + Z/2"


@pytest.mark.parametrize("kind", KINDS)
def test_export_roundtrip(kind):
    p = build(kind, 4)
    doc = json.loads(to_json(p))
    assert list(doc) == ["name", "n", "generators", "relators", "tags"]
    name, n, gens, rels, tags = read_structured(doc)
    assert (name, n, tags) == (p.name, 4, p.relation_tags)
    assert rels == p.relators
    assert gens == [word_of(g) for g in p.generators]
    name2, n2, gens2, rels2 = read_text(to_text(p))
    assert (name2, n2, gens2, rels2) == (name, n, gens, rels)
    assert to_structured(p) == to_structured(build(kind, 4))
