"""Chevalley action, weights, and the equivariant wedge projection."""

import pytest

from fockdual.action import (
    ModuleVector,
    WedgeTVector,
    Weight,
    apply_e,
    apply_f,
    apply_h,
    phi,
    phi_key,
    serre_report,
    unmatched_u,
    unmatched_w,
    weight_of,
    weight_root,
    wedge_apply_e,
    wedge_apply_f,
)
from fockdual.partitions import Bipartition, enumerate_bipartitions

EMPTY = Bipartition((), ())


def basis(t, black, white):
    return ModuleVector.basis(t, Bipartition(tuple(black), tuple(white)))


def test_e_on_vacuum_grows_dual_side():
    assert apply_e(-1, basis(0, (), ())) == basis(0, (1,), ())


def test_f_on_vacuum_grows_plain_side():
    assert apply_f(-1, basis(0, (), ())) == basis(0, (), (1,))


def test_e_acts_on_both_factors():
    got = apply_e(0, basis(0, (1,), (2,)))
    assert got == basis(0, (2,), (2,)) + basis(0, (1,), (1,))


def test_far_generators_act_as_zero():
    for t in (-2, 0, 3):
        assert apply_e(10**6, ModuleVector.basis(t, EMPTY)).is_zero
        assert apply_f(10**6, ModuleVector.basis(t, EMPTY)).is_zero
        assert apply_h(10**6, ModuleVector.basis(t, EMPTY)).is_zero
        assert apply_h(-(10**6), ModuleVector.basis(t, EMPTY)).is_zero


def test_h_is_diagonal_with_worked_eigenvalues():
    v = basis(0, (), (1,))
    assert apply_h(0, v) == v
    w = basis(1, (2,), (3,))
    assert apply_h(-1, w) == w.scale(-1)


@pytest.mark.parametrize(
    "t,black,white,expected",
    [
        (1, (), (), {0: -1}),
        (1, (2,), (3,), {-1: -1}),
        (0, (), (), {}),
        (1, (1,), (1,), {1: -1, 0: 1, -1: -1}),
    ],
)
def test_weight_examples(t, black, white, expected):
    assert weight_of(Bipartition(black, white), t) == Weight.from_items(expected.items())


def test_weight_matches_h_eigenvalues():
    for t in range(-3, 4):
        for bp in enumerate_bipartitions(5):
            v = ModuleVector.basis(t, bp)
            wt = weight_of(bp, t)
            for a in range(-7, 8):
                assert apply_h(a, v) == v.scale(wt.eval_h(a))


def test_weight_additivity_under_action():
    for t in (-2, 0, 1):
        for bp in enumerate_bipartitions(4):
            wt = weight_of(bp, t)
            for a in range(-6, 7):
                for mu in apply_e(a, ModuleVector.basis(t, bp)).terms:
                    assert weight_of(mu, t) == wt + weight_root(a)
                for mu in apply_f(a, ModuleVector.basis(t, bp)).terms:
                    assert weight_of(mu, t) == wt - weight_root(a)


def test_count_balance():
    for t in range(-3, 4):
        for bp in enumerate_bipartitions(6):
            assert len(unmatched_w(bp, t)) - len(unmatched_u(bp, t)) == t


@pytest.mark.parametrize(
    "t,black,white,expected",
    [
        # signs pinned by equivariance with the vacuum normalized to +1;
        # frozen from the iterated-contraction oracle
        (1, (), (), (1, (0,))),
        (1, (2,), (3,), (1, (-1,))),
        (1, (1,), (1,), None),
        (1, (), (1,), (1, (-1,))),
        (1, (1, 1), (1,), (-1, (1,))),
        (1, (1,), (2,), (-1, (-1,))),
    ],
)
def test_phi_examples(t, black, white, expected):
    assert phi_key(Bipartition(black, white), t) == expected


def test_phi_zero_ambient_gives_signed_scalars():
    assert phi_key(EMPTY, 0) == (1, ())
    assert phi_key(Bipartition((1,), (1,)), 0) == (-1, ())
    # mixed weight at t=0 maps to zero
    assert phi_key(Bipartition((2,), (1, 1)), 0) is None


def test_phi_kills_generator_images_at_zero_ambient():
    # the zero-ambient target is the scalar line with trivial action, so the
    # projection must vanish on the image of every generator
    for bp in enumerate_bipartitions(5):
        v = ModuleVector.basis(0, bp)
        for a in range(-7, 8):
            assert phi(apply_e(a, v)).is_zero
            assert phi(apply_f(a, v)).is_zero


def test_phi_equivariance_smoke():
    for t in (-2, -1, 1, 2):
        for bp in enumerate_bipartitions(4):
            v = ModuleVector.basis(t, bp)
            for a in range(-6, 7):
                assert phi(apply_e(a, v)) == wedge_apply_e(a, phi(v))
                assert phi(apply_f(a, v)) == wedge_apply_f(a, phi(v))


def test_phi_negative_t_vacuum():
    sign, key = phi_key(EMPTY, -2)
    assert (sign, key) == (1, (-1, -2))


def test_weight_json_and_str_round_trip():
    wt = weight_of(Bipartition((1,), (1,)), 1)
    assert Weight.from_json(wt.to_json()) == wt
    assert wt.to_str() == "-th(-1)+th(0)-th(1)"
    assert Weight().to_str() == "0"


def test_single_commutator_identity_worked():
    v = basis(0, (), (1,))
    lhs = apply_e(0, apply_f(0, v)) - apply_f(0, apply_e(0, v))
    assert lhs == apply_h(0, v) == v
    assert (apply_e(0, apply_f(5, v)) - apply_f(5, apply_e(0, v))).is_zero


def test_serre_report_small_sweep_is_clean():
    report = serre_report(0, (-3, 3), 4)
    assert report.passed
    assert report.checks > 0
    assert report.to_json()["violations"] == []
