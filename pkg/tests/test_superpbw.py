import numpy as np
import pytest
import sympy as sp

import kac_typicality.rootdata as rd
import kac_typicality.superpbw as pbw
from kac_typicality.errors import PreconditionError, ResourceCapError

FAST_SHAPES = [(1, 1), (1, 2), (2, 1)]
SLOW_SHAPES = [(2, 2), (1, 3), (3, 1)]


def test_element_text_and_parts():
    assert pbw.element_text((1, 2)) == "e 1 2"
    assert pbw.element_text((2, 1)) == "f 1 2"
    assert pbw.element_text((3, 3)) == "h 3"
    assert pbw.element_part((2, 1)) == 'neg'
    assert pbw.element_part((2, 2)) == 'diag'
    assert pbw.element_part((1, 2)) == 'pos'


def test_normal_order_key_sorts_negative_diagonal_positive():
    shape = rd.Shape(2, 1)
    units = [(a, b) for a in shape.indices() for b in shape.indices()]
    ordered = sorted(units, key=lambda x: pbw.normal_order_key(shape, x))
    parts = [pbw.element_part(x) for x in ordered]
    assert parts == ['neg'] * 3 + ['diag'] * 3 + ['pos'] * 3
    # odd f's first, odd e's last.
    assert ordered[:2] == [(3, 1), (3, 2)]
    assert ordered[-2:] == [(2, 3), (1, 3)]


def test_supercommutator():
    shape = rd.Shape(1, 1)
    assert pbw.supercommutator(shape, (1, 2), (2, 1)) == {(1, 1): 1, (2, 2): 1}
    assert pbw.supercommutator(shape, (1, 2), (1, 2)) == {}
    even = rd.Shape(2, 0)
    assert pbw.supercommutator(even, (1, 2), (2, 1)) == {(1, 1): 1, (2, 2): -1}
    assert pbw.supercommutator(even, (1, 1), (1, 1)) == {}


def test_parse_word():
    shape = rd.Shape(1, 1)
    w = pbw.parse_word("2 * e 1 2 * f 1 2", shape)
    assert w.coefficient == 2
    assert w.factors == ((1, 2), (2, 1))
    assert w.parity() == 0
    w = pbw.parse_word("h 1 * x 2 1", shape)
    assert w.factors == ((1, 1), (2, 1))
    assert w.parity() == 1
    assert w.to_text() == "h 1 * f 1 2"


@pytest.mark.parametrize("text", ["e 1", "g 1 2", "e 1 5", "e 1 two", "h 1 * 3"])
def test_parse_word_rejects_malformed_input(text):
    with pytest.raises(PreconditionError):
        pbw.parse_word(text, rd.Shape(1, 1))


def test_straighten_odd_pair():
    shape = rd.Shape(1, 1)
    x = pbw.straighten(pbw.parse_word("e 1 2 * f 1 2", shape))
    assert x.terms == {((1, 1),): 1, ((2, 2),): 1, ((2, 1), (1, 2)): -1}
    assert x.to_text() == "1 * h 1 + 1 * h 2 + -1 * f 1 2 * e 1 2"
    h1, h2 = pbw.h_symbols(shape)
    assert pbw.hc_project(x) == sp.Poly(h1 + h2, h1, h2, domain='ZZ')


def test_straighten_even_pair():
    shape = rd.Shape(2, 0)
    x = pbw.straighten(pbw.parse_word("e 1 2 * f 1 2", shape))
    assert x.terms == {((1, 1),): 1, ((2, 2),): -1, ((2, 1), (1, 2)): 1}


def test_odd_squares_vanish():
    shape = rd.Shape(1, 1)
    assert pbw.straighten(pbw.parse_word("f 1 2 * f 1 2", shape)).is_zero()
    assert pbw.straighten(pbw.parse_word("e 1 2 * e 1 2", shape)).to_text() == "0"


def test_sums_cancel():
    shape = rd.Shape(1, 1)
    w = pbw.parse_word("e 1 2 * f 1 2", shape)
    v = pbw.parse_word("f 1 2 * e 1 2", shape)
    u = pbw.parse_word("-1 * h 1", shape)
    s = pbw.parse_word("-1 * h 2", shape)
    assert pbw.straighten([w, v, u, s]).is_zero()


def test_normal_words_are_fixed():
    shape = rd.Shape(2, 2)
    pairs = rd.sorted_odd_pairs(shape)
    for w in [pbw.make_fI(shape, pairs), pbw.make_eI(shape, pairs)]:
        assert pbw.straighten(w).terms == {w.factors: 1}


def test_pbw_element_arithmetic_and_json():
    shape = rd.Shape(1, 1)
    x = pbw.straighten(pbw.parse_word("e 1 2 * f 1 2", shape))
    assert (x - x).is_zero()
    assert x + x == x.scale(2)
    d = x.to_json()
    assert d['shape'] == {'m': 1, 'n': 1}
    assert [t['coefficient'] for t in d['terms']] == ['1', '1', '-1']
    assert d['terms'][2]['parts'] == {
        'neg': [[2, 1]],
        'diag': [0, 0],
        'pos': [[1, 2]]
    }


def test_act_highest():
    shape = rd.Shape(1, 1)
    l1, l2 = rd.lambda_symbols(shape)
    x = pbw.straighten(pbw.parse_word("e 1 2 * f 1 2", shape))
    act = pbw.act_highest(x)
    assert list(act) == [()]
    assert act[()] == sp.Poly(l1 + l2, l1, l2, domain='ZZ')
    y = pbw.straighten(pbw.parse_word("f 1 2 * e 1 2", shape))
    assert pbw.act_highest(y) == {}


@pytest.mark.parametrize("m,n", FAST_SHAPES)
def test_verify_theorem(m, n):
    f_h, match = pbw.verify_theorem(rd.Shape(m, n))
    assert match
    assert f_h == rd.typicality_poly(rd.Shape(m, n)).as_poly()


@pytest.mark.slow
@pytest.mark.parametrize("m,n", SLOW_SHAPES)
def test_verify_theorem_larger_shapes(m, n):
    _, match = pbw.verify_theorem(rd.Shape(m, n))
    assert match


def test_verify_theorem_cap():
    with pytest.raises(ResourceCapError):
        pbw.verify_theorem(rd.Shape(3, 3))
    with pytest.raises(ResourceCapError):
        pbw.verify_theorem(rd.Shape(2, 1), cap_terms=1)


@pytest.mark.parametrize("m,n", FAST_SHAPES + [(2, 2)])
def test_verify_lemma41(m, n):
    shape = rd.Shape(m, n)
    st = pbw.Straightener(shape)
    for i in range(1, m + 1):
        assert pbw.verify_lemma41(shape, i, st)


def test_verify_lemma41_rejects_bad_index():
    with pytest.raises(PreconditionError):
        pbw.verify_lemma41(rd.Shape(2, 1), 3)
    with pytest.raises(PreconditionError):
        pbw.verify_lemma41(rd.Shape(2, 0), 1)


@pytest.mark.parametrize("m,n", FAST_SHAPES + [(2, 2)])
def test_verify_peeling(m, n):
    assert pbw.verify_peeling(rd.Shape(m, n))


@pytest.mark.parametrize("m,n", FAST_SHAPES + [(2, 2)])
def test_anticommutation_and_formula_star(m, n):
    shape = rd.Shape(m, n)
    st = pbw.Straightener(shape)
    assert pbw.verify_anticommutation(shape, st)
    assert pbw.verify_formula_star(shape, st)


@pytest.mark.parametrize("m,n", FAST_SHAPES + [(2, 2)])
def test_straighten_random_words(m, n):
    shape = rd.Shape(m, n)
    units = [(a, b) for a in shape.indices() for b in shape.indices()]
    rng = np.random.RandomState(m * 10 + n)
    st = pbw.Straightener(shape)
    for _ in range(50):
        idx = rng.randint(0, len(units), size=rng.randint(1, 6))
        w = pbw.SuperWord(shape, [units[i] for i in idx])
        x = pbw.straighten(w, st)
        for mono in x.terms:
            assert st.is_normal(mono)
            assert pbw.word_parity(shape, mono) == w.parity()
            assert pbw.word_weight(shape, mono) == w.weight()
        if not x.is_zero():
            assert pbw.straighten(x.to_words(), st) == x
