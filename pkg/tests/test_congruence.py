from math import gcd

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeperiod.congruence import (
    CosetTable,
    InvalidRepresentatives,
    NotPrime,
    Permutation,
    coset_index,
    coset_index_by_membership,
    cosets,
    in_gamma0,
    index_gamma0,
    is_prime,
    parse_word,
    phi,
    random_word,
    rho,
    rho_matrix_by_membership,
    sigma,
    t_p,
    u_q,
    x_m,
)
from heckeperiod.matrix import I, FormalSum, Mat2, S, T, T_PRIME, hnf_upper, inv_unimodular, mul

ST = mul(S, T)


def brute_index(n):
    """Count points of P^1(Z/n): pairs (c, d) with gcd(c, d, n) = 1 up to units."""
    pairs = {(c, d) for c in range(n) for d in range(n) if gcd(gcd(c, d), n) == 1}
    units = [u for u in range(1, n) if gcd(u, n) == 1] or [1]
    orbits = set()
    for c, d in pairs:
        orbits.add(min(((u * c) % n, (u * d) % n) for u in units))
    return len(orbits)


words = st.lists(st.sampled_from(["S", "T", "T^-1", "T'"]), max_size=10).map(lambda w: "*".join(w) or "I")


def test_in_gamma0_examples():
    assert in_gamma0(T, 2)
    assert not in_gamma0(S, 2)
    assert in_gamma0(Mat2(1, 0, 2, 1), 2)
    assert not in_gamma0(Mat2(2, 0, 0, 1), 2)  # det 2


def test_cosets_examples():
    assert cosets(1).reps == (I,)
    assert cosets(2).reps == (I, S, ST)
    assert cosets(3).mu == 4
    with pytest.raises(ValueError):
        cosets(0)


@pytest.mark.parametrize("n", range(1, 41))
def test_index_matches_brute_count(n):
    t = cosets(n)
    assert t.mu == index_gamma0(n) == (brute_index(n) if n > 1 else 1)
    for i, a in enumerate(t.reps, start=1):
        assert a.is_sl2()
        assert coset_index(a, t) == i


@pytest.mark.parametrize("n", [2, 3, 4, 6, 12])
def test_reps_pairwise_inequivalent(n):
    t = cosets(n)
    for i, a in enumerate(t.reps):
        for j, b in enumerate(t.reps):
            assert in_gamma0(mul(a, inv_unimodular(b)), n) == (i == j)


def test_coset_index_examples():
    t = cosets(2)
    assert coset_index(I, t) == 1
    assert coset_index(Mat2(0, 1, -1, 2), t) == 2
    assert coset_index(ST, t) == 3
    with pytest.raises(ValueError):
        coset_index(Mat2(1, 1, 0, 2), t)


@given(words, st.sampled_from([2, 3, 4, 5, 6, 9, 12]))
def test_coset_index_agrees_with_membership(w, n):
    g = parse_word(w)
    t = cosets(n)
    assert coset_index(g, t) == coset_index_by_membership(g, t)


def test_rho_examples():
    t = cosets(2)
    assert rho(I, t).targets == (1, 2, 3)
    assert rho(inv_unimodular(Mat2(2, -1, 1, 0)), t).targets == (2, 1, 3)
    assert rho(T, cosets(1)).targets == (1,)
    assert (rho(I, t).matrix() == np.eye(3, dtype=np.int64)).all()


@given(words, words, st.sampled_from([2, 3, 4, 6]))
def test_rho_homomorphism(w1, w2, n):
    g, h = parse_word(w1), parse_word(w2)
    t = cosets(n)
    lhs = rho(mul(g, h), t)
    assert lhs == rho(g, t) @ rho(h, t)
    assert (lhs.matrix() == rho(g, t).matrix() @ rho(h, t).matrix()).all()


@given(words, st.sampled_from([2, 3, 4, 6]))
def test_rho_matrix_definition(w, n):
    g = parse_word(w)
    t = cosets(n)
    m = rho(g, t).matrix()
    assert (m == rho_matrix_by_membership(g, t)).all()
    assert (m.sum(axis=0) == 1).all() and (m.sum(axis=1) == 1).all()


def test_permutation_apply_and_validation():
    p = Permutation((2, 3, 1))
    assert p.apply(["a", "b", "c"]) == ["b", "c", "a"]
    assert p[1] == 2 and len(p) == 3
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_random_word_is_sl2():
    rng = np.random.default_rng(0)
    for _ in range(50):
        assert random_word(rng).is_sl2()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("S*T^3", mul(S, Mat2(1, 3, 0, 1))),
        ("ST", ST),
        ("T'^-1 S", mul(inv_unimodular(T_PRIME), S)),
        ("T^(-2)", Mat2(1, -2, 0, 1)),
        ("I", I),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text", ["", "X", "S^", "T''"])
def test_parse_word_rejects(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_x_m_examples():
    assert x_m(1) == [I]
    assert x_m(2) == [Mat2(1, 0, 0, 2), Mat2(1, 1, 0, 2), Mat2(2, 0, 0, 1)]
    four = x_m(4)
    assert len(four) == 7
    assert [A.d for A in four].count(4) == 4 and [A.d for A in four].count(2) == 2
    for m in range(1, 40):
        assert len(x_m(m)) == sum(d for d in range(1, m + 1) if m % d == 0)
        assert all(A.is_x_m(m) for A in x_m(m))


def test_hecke_elements():
    A1, A2, A3 = x_m(2)
    assert t_p(2) == FormalSum.of(A1, A2, A3)
    assert u_q(2) == FormalSum.of(A1, A2)
    assert u_q(5) + FormalSum.of(Mat2(5, 0, 0, 1)) == t_p(5)
    with pytest.raises(NotPrime):
        t_p(4)
    with pytest.raises(NotPrime):
        u_q(1)
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_table_one():
    t = cosets(2)
    A1, A2, A3 = x_m(2)
    assert phi(A1, t) == [1, 2, 2]
    assert phi(A2, t) == [1, 1, 1]
    assert phi(A3, t) == [1, 2, 2]
    assert [sigma(a, A1) for a in t.reps] == [A1, A3, A3]
    assert [sigma(a, A2) for a in t.reps] == [A2, A2, A1]
    assert [sigma(a, A3) for a in t.reps] == [A3, A1, A2]


@pytest.mark.parametrize("m", range(1, 21))
def test_sigma_bijective_and_inverse(m):
    rng = np.random.default_rng(m)
    X = x_m(m)
    for _ in range(10):
        g = random_word(rng)
        image = [sigma(g, A) for A in X]
        assert sorted(image) == sorted(X)
        g_inv = inv_unimodular(g)
        for A, U in zip(X, image):
            assert sigma(g_inv, U) == A


@pytest.mark.parametrize("n", [2, 3, 4, 6])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_phi_relation(n, p):
    t = cosets(n)
    for A in x_m(p):
        for i, a in enumerate(t.reps):
            gamma, U = hnf_upper(mul(A, a))
            assert U == sigma(a, A)
            k = phi(A, t)[i]
            assert in_gamma0(mul(gamma, inv_unimodular(t.reps[k - 1])), n)


def test_sigma_rejects_bad_input():
    with pytest.raises(ValueError):
        sigma(Mat2(1, 1, 0, 2), I)
    with pytest.raises(ValueError):
        sigma(I, Mat2(1, 2, 0, 2))


def test_custom_reps():
    t = CosetTable.from_reps(2, [I, mul(S, T), S])
    assert t.index(S) == 3
    with pytest.raises(InvalidRepresentatives):
        CosetTable.from_reps(2, [I, S])
    with pytest.raises(InvalidRepresentatives):
        CosetTable.from_reps(2, [I, S, T])  # T is in the coset of I
    with pytest.raises(InvalidRepresentatives):
        CosetTable.from_reps(2, [I, S, Mat2(1, 1, 0, 2)])
