from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeperiod.congruence import x_m
from heckeperiod.farey import (
    LNSequence,
    NoNeighbor,
    OutOfDomain,
    ResourceGuard,
    farey_sequence,
    left_neighbor,
    lev,
    lns,
    m_of,
    m_terms,
)
from heckeperiod.matrix import INF, NEG_INF, ZERO, ExtRational, FormalSum, I, Mat2, act, det, inv_unimodular, mul


def q(text):
    return ExtRational.parse(text)


def brute_farey(n):
    """Sorted list of values u/v, |u| <= n, 0 <= v <= n, via Fraction."""
    finite = {Fraction(u, v) for u in range(-n, n + 1) for v in range(1, n + 1)}
    return [NEG_INF] + [ExtRational(f.numerator, f.denominator) for f in sorted(finite)] + [INF]


def brute_left_neighbor(x):
    below = [r for r in brute_farey(lev(x)) if r < x]
    return below[-1]


# -- examples -------------------------------------------------------------


@pytest.mark.parametrize("text, expected", [("0", 0), ("inf", 0), ("-inf", 0), ("1/2", 2), ("2/3", 3), ("-7/4", 7)])
def test_lev(text, expected):
    assert lev(q(text)) == expected


def test_farey_small_levels():
    assert farey_sequence(0).entries == (NEG_INF, ZERO, INF)
    assert farey_sequence(1).entries == (NEG_INF, q("-1"), ZERO, q("1"), INF)
    f2 = farey_sequence(2).entries
    assert f2.index(q("1/2")) == f2.index(ZERO) + 1
    assert f2.index(q("-1/2")) == f2.index(ZERO) - 1
    assert q("1/2") in farey_sequence(2)


@pytest.mark.parametrize("n", range(1, 13))
def test_farey_matches_brute_force(n):
    assert list(farey_sequence(n).entries) == brute_farey(n)


def test_farey_resource_guard():
    with pytest.raises(ResourceGuard):
        farey_sequence(10_001)
    with pytest.raises(ResourceGuard):
        farey_sequence(50, max_level=40)
    with pytest.raises(ValueError):
        farey_sequence(-1)


@pytest.mark.parametrize("text, expected", [("0", "-inf"), ("1/2", "0"), ("2/3", "1/2"), ("inf", "0"), ("-1", "-inf")])
def test_left_neighbor_examples(text, expected):
    assert left_neighbor(q(text)) == q(expected)


def test_left_neighbor_of_minus_infinity():
    with pytest.raises(NoNeighbor):
        left_neighbor(NEG_INF)
    with pytest.raises(NoNeighbor):
        lns(NEG_INF)


def test_left_neighbor_unknown_method():
    with pytest.raises(ValueError):
        left_neighbor(q("1/2"), method="guess")


@pytest.mark.parametrize("n", range(1, 16))
@pytest.mark.parametrize("method", ["fast", "scan"])
def test_left_neighbor_matches_brute_force(n, method):
    for x in brute_farey(n):
        if x != NEG_INF and lev(x) == n:
            assert left_neighbor(x, method=method) == brute_left_neighbor(x)


@pytest.mark.parametrize(
    "text, chain",
    [
        ("0", ["-inf", "0"]),
        ("1/2", ["-inf", "0", "1/2"]),
        ("2/3", ["-inf", "0", "1/2", "2/3"]),
        ("inf", ["-inf", "0", "inf"]),
    ],
)
def test_lns_examples(text, chain):
    seq = lns(q(text))
    assert isinstance(seq, LNSequence)
    assert seq.chain == tuple(q(c) for c in chain)
    assert seq.length == len(chain) - 1


def test_m_of_examples():
    assert m_of(ZERO) == FormalSum.of(I)
    assert m_of(q("1/2")) == FormalSum.of(I, Mat2(2, -1, 1, 0))
    assert m_of(q("2/3")) == FormalSum.of(I, Mat2(2, -1, 1, 0), Mat2(3, -2, 2, -1))


@pytest.mark.parametrize("text", ["1", "-1/2", "3/2", "inf", "-inf"])
def test_m_of_out_of_domain(text):
    with pytest.raises(OutOfDomain):
        m_of(q(text))


# -- properties -------------------------------------------------------------


@st.composite
def unit_rationals(draw):
    den = draw(st.integers(1, 60))
    return ExtRational(draw(st.integers(0, den - 1)), den)


@given(st.integers(1, 30))
def test_neighbor_determinant(n):
    entries = farey_sequence(n).entries
    for x, y in zip(entries, entries[1:]):
        assert x < y
        assert x.num * y.den - x.den * y.num == -1


@given(st.fractions(min_value=-40, max_value=40, max_denominator=40))
def test_lns_chain_structure(f):
    x = ExtRational(f.numerator, f.denominator)
    chain = lns(x).chain
    assert chain[0] == NEG_INF and chain[-1] == x
    for prev, cur in zip(chain, chain[1:]):
        assert left_neighbor(cur) == prev
    levels = [lev(c) for c in chain[1:]]
    assert levels == sorted(set(levels))


@given(unit_rationals())
def test_m_terms_properties(x):
    terms = m_terms(x)
    assert all(det(m) == 1 for m in terms)
    assert m_of(x).support() == set(terms)
    assert all(c == 1 for c, _ in m_of(x))
    # positivity of c zeta + d on (x, oo)
    for m in terms:
        assert m.c >= 0 and m.c * x.num + m.d * x.den >= 0
        assert m.c > 0 or m.d > 0
    # geodesic pieces chain from oo down to x
    inv = [inv_unimodular(m) for m in terms]
    assert act(inv[0], INF) in (INF, NEG_INF)
    assert act(inv[-1], ZERO) == x
    for a, b in zip(inv, inv[1:]):
        assert act(a, ZERO) == act(b, INF)


@pytest.mark.parametrize("m", range(1, 31))
def test_m_products_nonnegative(m):
    for A in x_m(m):
        for ml in m_terms(act(A, ZERO)):
            a, b, c, d = mul(ml, A)
            assert a > c >= 0 and d > b >= 0
