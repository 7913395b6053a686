import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lie2pbw.lie2 import (
    GSB_G0, InvalidLiePairError, LiePair, LiePairFormatError,
    build_presentation_original, dump_lie_pair, family_counts, gsb_relations_g0,
    parse_lie_pair, transform_to_fF, validate_lie_pair,
)
from lie2pbw.rewriting import RelationSet, complete, interreduce, irreducible_words, normal_form


def jacobi_oracle(c, e, d, t):
    """Jacobi identity of c + t e, checked on basis triples by direct
    bracket evaluation (no shortcuts)."""
    def br(u, v):
        out = [Fraction(0)] * d
        for a in range(d):
            for b in range(d):
                if u[a] and v[b]:
                    for k in range(d):
                        out[k] += u[a] * v[b] * (c[a][b][k] + t * e[a][b][k])
        return out
    basis = [[Fraction(int(a == b)) for b in range(d)] for a in range(d)]
    for x, y, z in itertools.product(basis, repeat=3):
        s = [p + q + r for p, q, r in zip(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))]
        if any(s):
            return False
    for x, y in itertools.product(basis, repeat=2):
        if any(p + q for p, q in zip(br(x, y), br(y, x))):
            return False
    return True


def compatible_oracle(g):
    # the Jacobiator of c + t e is quadratic in t, so three values decide
    return all(jacobi_oracle(g.bracket1, g.bracket2, g.dim, t) for t in (0, 1, 2))


SO3 = [(1, 2, 3, 1), (1, 3, 2, -1), (2, 3, 1, 1)]


# -- validation ----------------------------------------------------------------

def test_abelian_pair_is_valid():
    assert validate_lie_pair(LiePair.abelian(3))


def test_two_dimensional_pair_is_valid():
    g = LiePair.from_entries(2, [(1, 2, 1, 1)], [(1, 2, 2, 1)])
    assert validate_lie_pair(g)
    assert compatible_oracle(g)


def test_antisymmetry_failure_is_reported():
    t = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    t[0][1][2] = Fraction(1)          # [e1, e2] = e3 but [e2, e1] left at 0
    g = LiePair(3, LiePair.from_entries(3, SO3).bracket1, t)
    report = validate_lie_pair(g)
    assert not report
    assert report.lines() == ["antisymmetry of bracket 2 fails at (1, 2, 3)"]


def test_incompatible_pair():
    # so(3) and the bracket [e1,e2] = e1 are both Lie, but not compatible
    g = LiePair.from_entries(3, SO3, [(1, 2, 1, 1)])
    assert not compatible_oracle(g)
    report = validate_lie_pair(g)
    assert not report
    assert any("mixed" in line for line in report.lines())


small = st.integers(-1, 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3), small), max_size=3),
       st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3), small), max_size=3))
def test_validation_agrees_with_polarization(b1, b2):
    pairs = [(1, 2), (1, 3), (2, 3)]
    e1 = [(*pairs[p % 3], k, v) for p, k, v in b1]
    e2 = [(*pairs[p % 3], k, v) for p, k, v in b2]
    try:
        g = LiePair.from_entries(3, e1, e2)
    except ValueError:
        return
    assert bool(validate_lie_pair(g)) == compatible_oracle(g)


# -- presentations -------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_presentation_size(d):
    p = build_presentation_original(LiePair.abelian(d))
    assert len(p.relations) == 2 * comb(d, 2) + d * d


def test_dim_one_presentation():
    p = build_presentation_original(LiePair.abelian(1))
    A = p.alphabet
    assert p.relations == (A.poly("f1 f1 - f1 f1' - f1' f1 + f1' f1'"),)


def test_bracket_tail_sign():
    g = LiePair.from_entries(2, [(1, 2, 1, 1)], [])
    p = build_presentation_original(g)
    A = p.alphabet
    assert A.poly("f2 f1 - f1 f2 + f1") in p.relations


def test_invalid_pair_has_no_presentation():
    with pytest.raises(InvalidLiePairError):
        build_presentation_original(LiePair.from_entries(3, SO3, [(1, 2, 1, 1)]))


def test_transform_collapses_mixed_family():
    p = transform_to_fF(build_presentation_original(LiePair.abelian(2)))
    A = p.alphabet
    for i, j in itertools.product((1, 2), repeat=2):
        assert A.poly(f"F{i} F{j}") in p.relations
    assert all(not r.has_primed() and r.is_monic() for r in p.relations)
    # the primed commutator, reduced by the f-commutator and F F, is (3)
    (r,) = [r for r, lab in zip(p.relations, p.labels) if lab == "bracket2"]
    S = RelationSet(A, [A.poly("f2 f1 - f1 f2")] + [A.poly(f"F{i} F{j}") for i in (1, 2) for j in (1, 2)])
    assert normal_form(r, S).make_monic() == A.poly("F2 f1 - F1 f2 + f2 F1 - f1 F2")


def test_transform_then_complete_gives_same_words():
    p = transform_to_fF(build_presentation_original(LiePair.abelian(2)))
    S = RelationSet(p.alphabet, interreduce(p.alphabet, p.relations))
    G, saturated = complete(S, 3)
    assert saturated
    ref = gsb_relations_g0(2).relation_set()
    for n in range(4):
        assert irreducible_words(G, n) == irreducible_words(ref, n)


def test_equal_brackets_keep_g0_counts():
    g = LiePair.from_entries(2, [(1, 2, 1, 1)], [(1, 2, 1, 1)])
    p = transform_to_fF(build_presentation_original(g))
    S = RelationSet(p.alphabet, interreduce(p.alphabet, p.relations))
    G, saturated = complete(S, 5)
    assert saturated
    assert [len(irreducible_words(G, n)) for n in range(6)] == [1, 4, 10, 24, 56, 128]


# -- the five families -------------------------------------------------------

def test_family_sizes_dim_one():
    p = gsb_relations_g0(1)
    assert p.provenance == GSB_G0
    assert p.relations == (p.alphabet.poly("F1 F1"),)


def test_family_sizes_dim_two():
    p = gsb_relations_g0(2)
    A = p.alphabet
    assert family_counts(p) == {"(1)": 1, "(2)": 4, "(3)": 1, "(4)": 1, "(5)": 1}
    assert A.poly("F1 f2 F1 - F1 f1 F2") in p.relations
    assert A.poly("F2 f2 F1 - F1 f2 F2") in p.relations


def test_family_four_dim_three():
    p = gsb_relations_g0(3)
    A = p.alphabet
    got = {r.leading_word() for r, lab in zip(p.relations, p.labels) if lab == "(4)"}
    want = {A.word(f"F{k} f{j} F{i}") for k, i, j in [(1, 1, 2), (1, 1, 3), (1, 2, 3), (2, 2, 3)]}
    assert got == want


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_families_are_monic_with_distinct_leading_words(d):
    p = gsb_relations_g0(d)
    assert all(r.is_monic() for r in p.relations)
    lws = [r.leading_word() for r in p.relations]
    assert len(set(lws)) == len(lws)


# -- file format ---------------------------------------------------------------

def test_round_trip():
    g = LiePair.from_entries(3, SO3, [(1, 2, 3, Fraction(1, 2))])
    assert parse_lie_pair(dump_lie_pair(g)) == g


@pytest.mark.parametrize("text", [
    '{"dim": 2, "bracket1": [[1, 2, 1, "1/0"]]}',
    '{"dim": 2, "bracket1": [[2, 1, 1, "1"]]}',
    '{"dim": 2, "bracket1": [[1, 2, 3, "1"]]}',
    '{"dim": 0}',
    '{"dim": 2, "colour": 1}',
    '[1, 2]',
    'not json',
])
def test_malformed_files(text):
    with pytest.raises(LiePairFormatError):
        parse_lie_pair(text)


def test_empty_brackets_parse_as_abelian():
    assert parse_lie_pair('{"dim": 2}') == LiePair.abelian(2)
