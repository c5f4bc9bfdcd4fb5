import pytest
from hypothesis import given, strategies as st

from convexbraid.convex import PunctureSet
from convexbraid.words import (
    EMPTY,
    Band,
    ParseError,
    Rotation,
    Swing,
    Twist,
    Word,
    commutator,
    format_word,
    parse,
    rotation,
    word_of,
)

N = 6


def ps(*labels, n=N):
    return PunctureSet(n, labels)


def gens(n=N):
    out = [Band(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out += [Swing(ps(*b, n=n)) for b in [(1,), (2, 3), (1, 3, 5), (2, 3, 4, 5)]]
    out += [Rotation(ps(1, 2, 4, n=n)), Twist(ps(1, n=n), ps(2, 3, n=n)), Twist(ps(4, 5, n=n), ps(6, 1, n=n))]
    return out


words = st.lists(st.tuples(st.sampled_from(gens()), st.sampled_from([1, -1])), max_size=12).map(Word)


def test_free_reduction():
    s = Swing(ps(1, 2))
    w = word_of(s) * word_of(s).inverse()
    assert w == EMPTY and len(w) == 0 and not w
    assert len(Word.gen(s, 3)) == 3
    assert Word.gen(s, -2) == Word.gen(s, 2).inverse()


def test_rotation_canonicalizes_pairs():
    assert rotation(ps(2, 3)) == Band(2, 3)
    assert isinstance(rotation(ps(1, 2, 3)), Rotation)
    with pytest.raises(ValueError):
        Rotation(ps(1, 2))


def test_twist_is_unordered():
    assert Twist(ps(1), ps(2, 3)) == Twist(ps(2, 3), ps(1))
    with pytest.raises(ValueError):
        Twist(ps(1, 3), ps(2, 4))
    with pytest.raises(ValueError):
        Twist(ps(1, 2), ps(2, 3))


@pytest.mark.parametrize("text,expected", [
    ("1", ""),
    ("s1 s2^-1", "s1 s2^-1"),
    ("R{1,3}*R{1,3}", "R{1,3}^2"),
    ("S{3,2}^-2 S{1}", "S{2,3}^-2 S{1}"),
    ("T{2,3}|{1}", "T{1}|{2,3}"),
    ("R{1,2}", "s1"),
])
def test_parse_and_format(text, expected):
    w = parse(text, N)
    shown = format_word(w)
    assert shown == (expected or "1")
    assert parse(shown, N) == w


@pytest.mark.parametrize("bad", ["R{1,2", "s9", "S{}", "T{1}|{1}", "X1", "s1^", "R{1,7}"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad, N)


@given(words)
def test_print_parse_roundtrip(w):
    assert parse(format_word(w), N) == w


@given(words, words, words)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == EMPTY
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert commutator(a, a) == EMPTY


@given(words)
def test_words_stay_reduced(w):
    for (g, e), (h, f) in zip(w.letters, w.letters[1:]):
        assert not (g == h and e == -f)
