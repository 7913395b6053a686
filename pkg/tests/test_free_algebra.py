from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lie2pbw.free_algebra import (
    BIG, PRIMED, SMALL, Alphabet, AlphabetMismatchError, Letter, NcPolynomial,
    UnorderedGeneratorError, compare_letters, compare_words, leading_word,
    make_monic, substitute,
)

A2 = Alphabet(2)
A3 = Alphabet(3)


def f(i):
    return Letter(SMALL, i)


def F(i):
    return Letter(BIG, i)


# -- letters and words -----------------------------------------------------

def test_small_letters_ascend():
    assert compare_letters(f(1), f(2)) == -1
    assert compare_letters(f(2), f(2)) == 0


def test_small_before_big():
    assert compare_letters(f(9), F(1)) == -1
    assert compare_letters(F(1), f(9)) == 1


def test_big_letters_ascend_by_default():
    # F_2 > F_1: the order under which (1)-(5) have the leading words used
    # throughout and form a closed system
    assert compare_letters(F(2), F(1)) == 1
    assert compare_letters(F(2), F(1), big_descending=True) == -1


def test_primed_letters_are_unordered():
    with pytest.raises(UnorderedGeneratorError, match="unordered generator"):
        compare_letters(Letter(PRIMED, 1), f(1))
    p = A2.poly("f1' f2 + f1")
    with pytest.raises(UnorderedGeneratorError):
        p.leading_word()


def test_letter_codes_follow_the_order():
    letters = [f(1), f(2), F(1), F(2)]
    codes = [A2.code(x) for x in letters]
    assert codes == sorted(codes)
    assert [A2.letter(c) for c in codes] == letters


@pytest.mark.parametrize("u, v, expected", [
    ("f1 f1", "f2", 1),
    ("F1 f2", "F1 f1", 1),
    ("f2 F1", "F1 f2", -1),
    ("F2 f1", "F2 f1", 0),
])
def test_compare_words(u, v, expected):
    assert compare_words(A3.word(u), A3.word(v)) == expected


def test_aliases_for_dim_two():
    assert A2.word("f g F G") == A2.word("f1 f2 F1 F2")
    assert A2.format_word(A2.word("G g F"), aliases=True) == "G g F"
    assert Alphabet(1).word("f F") == Alphabet(1).word("f1 F1")
    with pytest.raises(ValueError):
        A3.word("g")


@pytest.mark.parametrize("tok", ["f4", "F0", "x1", "F1'"])
def test_bad_tokens(tok):
    with pytest.raises(ValueError):
        A3.word(tok)


# -- polynomial arithmetic ---------------------------------------------------

def test_product_distributes():
    p = A2.poly("f1 + F1") * A2.poly("f1 - F1")
    assert p == A2.poly("f1 f1 - f1 F1 + F1 f1 - F1 F1")


def test_unit_and_zero():
    p = A2.poly("F2 f1 - 1/2 f1 F2 + 3")
    assert p * NcPolynomial.one(A2) == p
    assert NcPolynomial.zero(A2) * p == NcPolynomial.zero(A2)
    assert not (p - p)


def test_parse_round_trip():
    p = A3.poly("F3 f2 f1 - 2/3 f1 F2 + 5")
    assert A3.poly(str(p)) == p
    assert p.coefficient(A3.word("f1 F2")) == Fraction(-2, 3)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        A2.poly("f1") + A3.poly("f1")


@pytest.mark.parametrize("text, lead", [
    ("F2 f1 - F1 f2 + f2 F1 - f1 F2", "F2 f1"),
    ("f2 f1 - f1 f2", "f2 f1"),
    ("F1 f2 F1", "F1 f2 F1"),
])
def test_leading_word(text, lead):
    assert leading_word(A2.poly(text)) == A2.word(lead)


def test_make_monic():
    assert make_monic(A2.poly("3 f2 f1 - 3 f1 f2")) == A2.poly("f2 f1 - f1 f2")
    assert make_monic(A2.poly("-1/2 F1 F2")) == A2.poly("F1 F2")
    p = A2.poly("f2 f1 - f1 f2")
    assert make_monic(p) == p


def test_zero_has_no_leading_word():
    with pytest.raises(ValueError):
        NcPolynomial.zero(A2).leading_word()


def test_substitution_collapses_mixed_relation():
    # x y - x y' - x' y + x' y' with x' -> x - F_x, y' -> y - F_y
    p = A2.poly("f1 f2 - f1 f2' - f1' f2 + f1' f2'")
    for i in (1, 2):
        p = substitute(p, A2.primed(i), A2.poly(f"f{i} - F{i}"))
    assert p == A2.poly("F1 F2")


def test_substitute_absent_letter():
    p = A2.poly("f1 F2")
    assert substitute(p, A2.primed(1), A2.poly("f1 - F1")) == p


# -- properties ----------------------------------------------------------------

def words(d=3, max_len=4):
    return st.lists(st.integers(0, 2 * d - 1), max_size=max_len).map(tuple)


def polys(d=3):
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(words(d), coeffs, max_size=5).map(lambda t: NcPolynomial(A3, t))


@settings(max_examples=60, deadline=None)
@given(words(), words(), words())
def test_deglex_is_monomial(u, v, w):
    # u < v implies a u b < a v b: multiplication respects the order
    c = compare_words(u, v)
    assert compare_words(w + u, w + v) == c
    assert compare_words(u + w, v + w) == c


@settings(max_examples=60, deadline=None)
@given(words(), words())
def test_deglex_total(u, v):
    assert compare_words(u, v) == -compare_words(v, u)
    assert (compare_words(u, v) == 0) == (u == v)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) - q == p


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_leading_word_of_product(p, q):
    if p and q:
        assert (p * q).leading_word() == p.leading_word() + q.leading_word()


@settings(max_examples=60, deadline=None)
@given(polys())
def test_make_monic_idempotent(p):
    if p:
        m = p.make_monic()
        assert m.is_monic()
        assert m.make_monic() == m
        assert m.leading_word() == p.leading_word()
