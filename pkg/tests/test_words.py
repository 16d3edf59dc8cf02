import random

import pytest

from foxhom.words import ParseError, Word, exponent_vector, parse_word

ABC = ("a", "b", "c")


def random_word(rng, alphabet=ABC, max_runs=8):
    runs = []
    for _ in range(rng.randrange(max_runs + 1)):
        runs.append((rng.choice(alphabet), rng.choice([-3, -2, -1, 1, 2, 3])))
    return Word(runs)


def test_parse_examples():
    w = parse_word("s t s^-1 t", ["s", "t"])
    assert w.runs == (("s", 1), ("t", 1), ("s", -1), ("t", 1))
    assert parse_word("s s^-1", ["s"]) == Word()
    assert parse_word("m^2 m^-1", ["m"]).runs == (("m", 1),)
    assert parse_word("", ["s"]) == Word()


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_word("q", ["s"])
    with pytest.raises(ParseError):
        parse_word("s^x", ["s"])
    with pytest.raises(ParseError):
        parse_word("s^0", ["s"])
    err = None
    try:
        parse_word("s t^bad", ["s", "t"])
    except ParseError as exc:
        err = exc
    assert err is not None and err.position == 1


def test_reduction_cascades():
    w = Word([("a", 1), ("b", 1), ("b", -1), ("a", -1)])
    assert not w
    w = Word([("a", 2), ("b", 1), ("b", -1), ("a", -1)])
    assert w.runs == (("a", 1),)


def test_inverse_and_concat():
    rng = random.Random(7)
    for _ in range(200):
        w = random_word(rng)
        assert ~(~w) == w
        assert not (w * ~w)
        assert not (~w * w)


def test_parse_print_roundtrip():
    rng = random.Random(11)
    for _ in range(200):
        w = random_word(rng)
        assert parse_word(str(w), ABC) == w


def test_power():
    w = parse_word("a b", ABC)
    assert w**0 == Word()
    assert w**2 == parse_word("a b a b", ABC)
    assert w**-1 == ~w
    assert parse_word("a", ABC) ** 3 == Word([("a", 3)])


def test_substitute():
    w = parse_word("a b a^-1", ABC)
    assert w.substitute("a", parse_word("b c", ABC)) == parse_word(
        "b c b c^-1 b^-1", ABC
    )
    assert w.substitute("b", Word()) == Word()  # a a^-1 cancels


def test_exponent_vector_examples():
    order = ("m", "s", "t", "u")
    assert exponent_vector(parse_word("s t s^-1 t", order), order) == [0, 0, 2, 0]
    assert exponent_vector(parse_word("t^-1 s^-1 t s^-1", order), order) == [0, -2, 0, 0]
    assert exponent_vector(Word(), order) == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        exponent_vector(parse_word("a", ABC), ["b"])


def test_exponent_vector_additive():
    rng = random.Random(13)
    for _ in range(200):
        u, v = random_word(rng), random_word(rng)
        uv = exponent_vector(u * v, ABC)
        added = [
            a + b
            for a, b in zip(exponent_vector(u, ABC), exponent_vector(v, ABC))
        ]
        assert uv == added
