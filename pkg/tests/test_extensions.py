"""Standard extensions: the forced letter, iterates, and maximal extensions."""

import pytest

import oracles
from richwords import (
    LengthViolation,
    NotAPrefix,
    NotRich,
    is_rich,
    is_std_ext,
    max_std_ext,
    pal_closure,
    rich_extensions,
    std_ext,
    word,
)

W1 = "123999322399932442399932255223993"
W2 = "123999599932239949"


def test_std_ext_examples():
    assert std_ext(word("110101100110")).chars == "1101011001101"
    assert std_ext(word("12399")).chars == "123993"
    assert std_ext(word("00", 2)).chars == "000"
    assert std_ext(word("12399"), 0).chars == "12399"
    assert std_ext(word("12399"), 3).chars == "12399321"
    assert std_ext(word("12399"), 3) == pal_closure(word("12399"))


def test_std_ext_errors():
    bad = next(s for s in oracles.all_words(2, 8) if not oracles.is_rich(s))
    with pytest.raises(NotRich):
        std_ext(word(bad, 2))
    with pytest.raises(LengthViolation):
        std_ext(word("0", 2))
    with pytest.raises(LengthViolation):
        std_ext(word("01", 2), -1)


def test_std_ext_matches_oracle_and_stays_rich(rich2):
    for s in rich2:
        if len(s) < 2 or len(s) > 8:
            continue
        out = std_ext(word(s, 2), 2)
        assert out.chars == oracles.std_ext1(oracles.std_ext1(s)), s
        assert len(out) == len(s) + 2
        assert is_rich(out), s


def test_std_ext_reaches_the_palindromic_closure(rich2):
    for s in rich2:
        if len(s) < 2 or len(s) > 9:
            continue
        closure = pal_closure(word(s, 2))
        assert std_ext(word(s, 2), len(closure) - len(s)) == closure, s


def test_is_std_ext_examples():
    assert is_std_ext(word("1101011001101"), word("110101100110"))
    w = word("110101100110")
    assert is_std_ext(w, w)
    assert not is_std_ext(word("1101011001100"), word("110101100110"))
    assert not is_std_ext(word("0110", 2), word("00", 2))


def test_is_std_ext_agrees_with_iterates(rich2):
    for s in rich2:
        if len(s) < 2 or len(s) > 7:
            continue
        w = word(s, 2)
        for j in range(3):
            assert is_std_ext(std_ext(w, j), w), (s, j)


def test_max_std_ext_examples():
    v1 = "1239993223999324423999"
    assert max_std_ext(word(W1), word(v1)).chars == v1 + "322"
    v2 = "1239995999"
    assert max_std_ext(word(W2), word(v2)).chars == v2 + "32"
    w = word("0101", 2)
    assert max_std_ext(w, w) == w


def test_max_std_ext_requires_prefix():
    with pytest.raises(NotAPrefix):
        max_std_ext(word("0101", 2), word("11", 2))


def test_max_std_ext_is_maximal(rich2):
    # The next letter after the returned prefix, if any, must be non-standard.
    for s in rich2:
        if len(s) < 4 or len(s) > 9:
            continue
        v = s[:3]
        got = max_std_ext(word(s, 2), word(v, 2)).chars
        assert got.startswith(v) and s.startswith(got)
        assert is_std_ext(word(got, 2), word(v, 2))
        if len(got) < len(s):
            assert s[len(got)] != oracles.std_letter(got), s


def test_rich_extensions_examples():
    assert rich_extensions(word("", 2)) == frozenset("01")
    assert rich_extensions(word("", 3)) == frozenset("012")
    assert rich_extensions(word("110101100110")) >= {"0", "1"}


def test_rich_extensions_match_oracle(rich2, rich3):
    for s in rich2:
        if len(s) > 8:
            continue
        got = rich_extensions(word(s, 2))
        assert got == frozenset(oracles.rich_letters(s, 2)), s
        assert 1 <= len(got) <= 2
    for s in rich3:
        assert rich_extensions(word(s, 3)) == frozenset(oracles.rich_letters(s, 3)), s


def test_rich_extensions_contain_the_standard_letter(rich2):
    for s in rich2:
        if len(s) < 2:
            continue
        assert oracles.std_letter(s) in rich_extensions(word(s, 2)), s
