"""Windowed wedge models: action, contraction, kernel chains, characters."""

from fractions import Fraction

import pytest

from fockdual.action import Weight
from fockdual.linalg import Subspace, vec
from fockdual.wedges import (
    DegreeError,
    OutOfWindowError,
    all_keys,
    character_of,
    contraction,
    kernel_chain,
    kernel_multiplicity,
    keys_of_weight,
    socle_json,
    wedge_apply_e,
    wedge_apply_f,
    wedge_weight,
)

W = (-2, 1)  # default window


def key(wtup, utup):
    return (tuple(wtup), tuple(utup))


def one(wtup, utup):
    return {key(wtup, utup): Fraction(1)}


def test_f_moves_both_factors():
    got = wedge_apply_f(-1, one((0,), (-1,)), W)
    assert got == {key((-1,), (-1,)): 1, key((0,), (0,)): 1}


def test_out_of_window_guard():
    with pytest.raises(OutOfWindowError):
        wedge_apply_e(5, one((0,), (-1,)), W)
    with pytest.raises(OutOfWindowError):
        wedge_apply_e(1, one((0,), (-1,)), W)  # a+1 = 2 outside


def test_e_on_two_dual_factors():
    got = wedge_apply_e(0, one((0, -1), ()), W)
    assert got == {key((1, -1), ()): 1}


def test_contraction_base_cases():
    assert contraction(1, 1, one((-1,), (-1,))) == {key((), ()): -1}
    assert contraction(1, 1, one((0,), (-1,))) == {}
    assert contraction(2, 1, one((0, -1), (0,))) == {key((-1,), ()): -1}


def test_contraction_degree_error():
    with pytest.raises(DegreeError):
        contraction(0, 1, one((), (0,)))
    with pytest.raises(DegreeError):
        contraction(1, 0, one((0,), ()))


def test_contraction_equivariance_sweep():
    for window in [(-2, 1), (-1, 2)]:
        lo, hi = window
        for m in (1, 2):
            for n in (1, 2):
                for k in all_keys(m, n, window):
                    v = {k: Fraction(1)}
                    for a in range(lo, hi):
                        assert contraction(m, n, wedge_apply_e(a, v, window)) == wedge_apply_e(
                            a, contraction(m, n, v), window
                        )
                        assert contraction(m, n, wedge_apply_f(a, v, window)) == wedge_apply_f(
                            a, contraction(m, n, v), window
                        )


def test_kernel_chain_one_one():
    layers = kernel_chain(1, 1, (-2, 1))
    assert [layer.dim for layer in layers] == [15, 1]
    assert sum(layer.dim for layer in layers) == 16
    # the top layer is the image of the contraction: the zero-weight line
    assert layers[1].character == {Weight(): 1}


def test_kernel_chain_no_contraction_side():
    layers = kernel_chain(1, 0, (-2, 1))
    assert [layer.dim for layer in layers] == [4]


def test_kernel_chain_small_window():
    layers = kernel_chain(1, 1, (0, 1))
    assert [layer.dim for layer in layers] == [3, 1]


def test_kernel_chain_layer_count():
    for m, n, window in [(2, 2, (-2, 1)), (3, 2, (-3, 2)), (2, 3, (-3, 2))]:
        layers = kernel_chain(m, n, window)
        assert len(layers) == min(m, n) + 1
        assert all(layer.dim > 0 for layer in layers)
        total = len(all_keys(m, n, window))
        assert sum(layer.dim for layer in layers) == total


def test_rank_nullity_per_weight_consistent():
    m, n, window = 2, 1, (-2, 1)
    keys = all_keys(m, n, window)
    total_rank = 0
    for k in keys:
        pass
    by_weight = {}
    for k in keys:
        by_weight.setdefault(wedge_weight(k), []).append(k)
    from fockdual.linalg import kernel as ker

    global_nullity = 0
    for weight, domain in by_weight.items():
        op = {k: contraction(m, n, {k: Fraction(1)}) for k in domain}
        null = ker(op, domain).dim
        global_nullity += null
        total_rank += len(domain) - null
    op_all = {k: contraction(m, n, {k: Fraction(1)}) for k in keys}
    assert ker(op_all, keys).dim == global_nullity
    assert total_rank == len(keys) - global_nullity


def test_character_of_examples():
    s = Subspace()
    s.insert(vec({key((0,), (0,)): 1}))
    assert character_of(s) == {Weight(): 1}
    s2 = Subspace()
    s2.insert(vec({key((0,), (-1,)): 1}))
    s2.insert(vec({key((-1,), (0,)): 1}))
    assert character_of(s2) == {
        Weight.from_items([(-1, 1), (0, -1)]): 1,
        Weight.from_items([(0, 1), (-1, -1)]): 1,
    }
    full = Subspace()
    for k in all_keys(1, 1, (0, 1)):
        full.insert(vec({k: 1}))
    char = character_of(full)
    assert char[Weight()] == 2
    assert char[Weight.from_items([(0, 1), (1, -1)])] == 1
    assert char[Weight.from_items([(1, 1), (0, -1)])] == 1


def test_keys_of_weight_enumeration():
    weight = Weight.from_items([(0, -1)])
    keys = keys_of_weight(2, 1, (-2, 1), weight)
    assert len(keys) == 3  # matched index ranges over the window minus {0}
    assert all(wedge_weight(k) == weight for k in keys)
    assert keys_of_weight(1, 1, (-2, 1), Weight.from_items([(5, 1), (0, -1)])) == []


def test_kernel_multiplicity_examples():
    # spread support: one key, automatically killed by the contraction
    mu = Weight.from_items([(1, 1), (0, -1)])
    assert kernel_multiplicity(1, 1, (-3, 3), mu) == 1
    # zero weight in (1,1): kernel multiplicity is the diagonal count minus one
    assert kernel_multiplicity(1, 1, (-2, 1), Weight()) == 3
    assert kernel_multiplicity(1, 1, (-3, 2), Weight()) == 5
    # degenerate side: whole space
    assert kernel_multiplicity(1, 0, (-2, 1), Weight.from_items([(0, -1)])) == 1
    assert kernel_multiplicity(0, 0, (-2, 1), Weight()) == 1


def test_window_stability_for_spread_weights():
    # layers across window growth, at weights whose support size reaches the
    # layer's degree (finite true multiplicity)
    for m, n in [(1, 1), (2, 1)]:
        mu_items = [(i, -1) for i in range(m)] + [(-1 - j, 1) for j in range(n)]
        mu = Weight.from_items(mu_items)
        small = kernel_multiplicity(m, n, (-m - n - 2, m + n + 2), mu)
        large = kernel_multiplicity(m, n, (-m - n - 3, m + n + 3), mu)
        assert small == large == 1


def test_socle_json_shape():
    data = socle_json(1, 1, (-2, 1))
    assert data["m"] == 1 and data["window"] == [-2, 1]
    assert [layer["dim"] for layer in data["layers"]] == [15, 1]
    assert data["layers"][1]["character"] == {"0": 1}
