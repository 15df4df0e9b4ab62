#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
随机森林上的代数定律（hypothesis）
"""

from hypothesis import given, settings, strategies as st

from src.core.coproduct import delta_eps, delta_eps_comb
from src.core.forest import Forest, all_splits, bplus, concat, hl_order, leaf, split_at
from src.core.freemodule import (
    LinComb, act_left, act_right, expand_left, expand_right, lc_mul, tensor,
)
from src.core.hopf import ANTIPODE, D_EPS, IDENTITY, antipode, compose, convolve
from src.core.textio import from_json, parse_forest, parse_lincomb, parse_tensor2, serialize, to_json


def forests_up_to(max_vertices):
    trees = st.recursive(
        st.sampled_from(["@", "x", "y"]).map(leaf),
        lambda children: st.lists(children, max_size=2).map(lambda ts: bplus(Forest(tuple(ts)))),
        max_leaves=max_vertices // 2,
    )
    return st.lists(trees, max_size=2).map(lambda ts: Forest(tuple(ts))).filter(
        lambda F: F.vertex_count <= max_vertices
    )


forests = forests_up_to(6)
small_forests = forests_up_to(4)
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
lincombs = st.lists(st.tuples(small_forests, coefficients), max_size=3).map(LinComb)
endos = st.sampled_from([IDENTITY, D_EPS, ANTIPODE, compose(D_EPS, D_EPS)])

law = settings(max_examples=50, deadline=None)


@law
@given(lincombs, lincombs, lincombs)
def test_product_associative(u, v, w):
    assert lc_mul(lc_mul(u, v), w) == lc_mul(u, lc_mul(v, w))


@law
@given(lincombs)
def test_product_unit(u):
    assert lc_mul(LinComb.one(), u) == u
    assert lc_mul(u, LinComb.one()) == u


@law
@given(lincombs, lincombs, lincombs, lincombs)
def test_bimodule_actions_commute(a, u, v, b):
    t = tensor(u, v)
    assert act_right(act_left(a, t), b) == act_left(a, act_right(t, b))


@law
@given(forests, forests)
def test_leibniz(F, G):
    """Δε(FG) = F·Δε(G) + Δε(F)·G"""
    expected = act_left(LinComb.of(F), delta_eps(G)) + act_right(delta_eps(F), LinComb.of(G))
    assert delta_eps(concat(F, G)) == expected


@law
@given(forests)
def test_coassociative(F):
    t = delta_eps(F)
    assert expand_left(t, delta_eps) == expand_right(t, delta_eps)


@law
@given(forests)
def test_recursive_equals_combinatorial(F):
    assert delta_eps(F) == delta_eps_comb(F)


@law
@given(forests)
def test_split_invariants(F):
    """每个顶点的拆分满足 |B_a| + |R_a| = |F| - 1，且各顶点给出不同的项"""
    assert len(hl_order(F)) == F.vertex_count
    for index in range(F.vertex_count):
        above, below = split_at(F, index)
        assert above.vertex_count + below.vertex_count == F.vertex_count - 1
    assert len(set(all_splits(F))) == F.vertex_count


@law
@given(small_forests, endos, endos, endos)
def test_convolution_associative(F, f, g, h):
    assert convolve(convolve(f, g), h).on_basis(F) == convolve(f, convolve(g, h)).on_basis(F)


@law
@given(lincombs, lincombs, coefficients)
def test_antipode_linear(u, v, c):
    assert antipode(u + v) == antipode(u) + antipode(v)
    assert antipode(u.scale(c)) == antipode(u).scale(c)


@law
@given(forests)
def test_forest_round_trip(F):
    assert parse_forest(serialize(F)) == F
    assert from_json(to_json(F)) == F


@law
@given(lincombs, lincombs)
def test_lincomb_and_tensor_round_trip(u, v):
    assert parse_lincomb(serialize(u)) == u
    assert from_json(to_json(u), kind="lincomb") == u
    t = tensor(u, v)
    assert parse_tensor2(serialize(t)) == t
    assert from_json(to_json(t), kind="tensor") == t
