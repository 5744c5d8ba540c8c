"""Quadratic orders: singular maps, conductors, Gauss's Lemma."""

import random

import pytest

from kummerlab.arith import primes_below
from kummerlab.quadorder import (
    QuadOrder,
    catalog,
    catalog_order,
    conductor,
    dichotomy_check,
    enumerate_quad_maps,
    gauss_lemma_check,
    is_integrally_closed,
    prime_square_anomaly,
)

RNG_SEED = 83231

SQRT_M3 = QuadOrder(0, 3)
GAUSSIAN = QuadOrder(0, 1)


def test_order_validation():
    with pytest.raises(ValueError):
        QuadOrder(0, -4)  # discriminant 16 is a square
    with pytest.raises(ValueError):
        QuadOrder(2, 1)  # discriminant 0


def test_element_arithmetic_and_norm():
    theta = SQRT_M3.element(0, 1)
    assert theta * theta == SQRT_M3.element(-3)
    assert SQRT_M3.element(1, 1).norm() == 4  # |1 + sqrt(-3)|^2
    golden = QuadOrder(-1, -1)
    t = golden.element(0, 1)
    assert t * t == golden.element(1, 0) + t  # theta^2 = theta + 1


def test_map_enumeration():
    maps = enumerate_quad_maps(SQRT_M3, 2)
    assert len(maps) == 1 and maps[0].label() == 1
    phi = maps[0]
    assert phi.kills(SQRT_M3.element(1, 1))
    assert phi.kills(SQRT_M3.element(2, 0))
    assert phi.apply(SQRT_M3.element(0, 1)).residue() == 1

    assert sorted(m.label() for m in enumerate_quad_maps(GAUSSIAN, 5)) == [2, 3]
    inert = enumerate_quad_maps(GAUSSIAN, 7)
    assert len(inert) == 1 and inert[0].f == 2

    for p in (2, 3, 5):
        maps = enumerate_quad_maps(QuadOrder(0, p * p), p)
        assert len(maps) == 1 and maps[0].label() == 0


def test_kernels():
    phi = enumerate_quad_maps(SQRT_M3, 2)[0]
    kernel = phi.kernel()
    assert kernel.index() == 2
    assert [1, 1] in kernel and [2, 0] in kernel and [1, 0] not in kernel
    inert = enumerate_quad_maps(GAUSSIAN, 7)[0]
    assert inert.kernel().index() == 49


def test_singularity_witnesses():
    phi2 = enumerate_quad_maps(SQRT_M3, 2)[0]
    rep = dichotomy_check(SQRT_M3, phi2, SQRT_M3.element(1, 1), SQRT_M3.element(2))
    assert rep == {"at_fraction": False, "at_inverse": False}
    for p in (2, 3, 5):
        order = QuadOrder(0, p * p)
        phi = enumerate_quad_maps(order, p)[0]
        rep = dichotomy_check(order, phi, order.element(0, 1), order.element(p))
        assert rep == {"at_fraction": False, "at_inverse": False}


def test_integral_element_witnesses():
    # each catalogued integral element outside its order defeats the map in
    # both directions
    for entry in catalog():
        witness = entry["integral_witness"]
        if witness is None:
            continue
        order = catalog_order(entry)
        num = order.element(*witness["numerator"])
        den = order.element(witness["denominator"])
        p = witness["p"]
        hit = False
        for phi in enumerate_quad_maps(order, p):
            rep = dichotomy_check(order, phi, num, den)
            if not rep["at_fraction"] and not rep["at_inverse"]:
                hit = True
        assert hit, entry["name"]


def test_nonsingular_fraction():
    phi = enumerate_quad_maps(GAUSSIAN, 2)[0]
    rep = dichotomy_check(GAUSSIAN, phi, GAUSSIAN.element(1, 1), GAUSSIAN.element(1))
    assert rep["at_fraction"]


def test_maximal_orders_keep_dichotomy():
    rng = random.Random(RNG_SEED)
    for u, v in [(0, 1), (-1, -1), (0, 5)]:
        order = QuadOrder(u, v)
        assert is_integrally_closed(order)
        maps = [
            phi
            for p in primes_below(31)
            for phi in enumerate_quad_maps(order, p)
        ]
        count = 0
        while count < 200:
            num = order.element(rng.randint(-9, 9), rng.randint(-9, 9))
            den = order.element(rng.randint(-9, 9), rng.randint(-9, 9))
            if num.is_zero() or den.is_zero():
                continue
            count += 1
            for phi in maps:
                rep = dichotomy_check(order, phi, num, den)
                assert rep["at_fraction"] or rep["at_inverse"]


def test_singular_orders_fail_only_at_conductor_primes():
    rng = random.Random(RNG_SEED + 1)
    for u, v, cond in [(0, 3, 2), (0, 4, 2), (0, 9, 3), (0, 25, 5), (0, -5, 2)]:
        order = QuadOrder(u, v)
        assert conductor(order) == cond
        # a witness exists at every prime dividing the conductor
        for p in {cond}:
            witnesses = 0
            for phi in enumerate_quad_maps(order, p):
                for num, den in [
                    (order.element(0, 1), order.element(p)),
                    (order.element(1, 1), order.element(2)),
                ]:
                    rep = dichotomy_check(order, phi, num, den)
                    if not rep["at_fraction"] and not rep["at_inverse"]:
                        witnesses += 1
            assert witnesses > 0, (u, v, p)
        # and never at primes coprime to it
        maps = [
            phi
            for p in primes_below(31)
            if cond % p != 0
            for phi in enumerate_quad_maps(order, p)
        ]
        count = 0
        while count < 100:
            num = order.element(rng.randint(-9, 9), rng.randint(-9, 9))
            den = order.element(rng.randint(-9, 9), rng.randint(-9, 9))
            if num.is_zero() or den.is_zero():
                continue
            count += 1
            for phi in maps:
                rep = dichotomy_check(order, phi, num, den)
                assert rep["at_fraction"] or rep["at_inverse"], (u, v, phi.p)


def test_prime_square_anomaly():
    rep = prime_square_anomaly()
    assert rep["holds"]
    assert rep["p_index"] == 2 and rep["two_index"] == 4
    assert rep["p_squared_index"] == 8 and rep["two_p_index"] == 8
    assert rep["p_squared_equals_two_p"] and not rep["p_equals_two"]
    assert rep["maximal_order_two_inert"]


def test_conductors_pinned():
    assert conductor(SQRT_M3) == 2
    assert conductor(GAUSSIAN) == 1
    assert conductor(QuadOrder(0, 9)) == 3
    assert conductor(QuadOrder(-1, -1)) == 1
    assert conductor(QuadOrder(0, -5)) == 2
    assert is_integrally_closed(QuadOrder(-1, 1))  # Z[zeta_6]
    assert not is_integrally_closed(SQRT_M3)


def test_gauss_lemma_pinned():
    rep = gauss_lemma_check(SQRT_M3, SQRT_M3.element(1), SQRT_M3.element(1))
    assert rep["reducible_over_K"] and not rep["reducible_over_O"]
    assert rep["roots"] == [["-1/2", "1/2"], ["-1/2", "-1/2"]]

    sqrt5 = QuadOrder(0, -5)
    rep5 = gauss_lemma_check(sqrt5, sqrt5.element(-1), sqrt5.element(-1))
    assert rep5["reducible_over_K"] and not rep5["reducible_over_O"]

    rep_i = gauss_lemma_check(GAUSSIAN, GAUSSIAN.element(0), GAUSSIAN.element(-4))
    assert rep_i["reducible_over_K"] and rep_i["reducible_over_O"]

    irreducible = gauss_lemma_check(GAUSSIAN, GAUSSIAN.element(0), GAUSSIAN.element(3))
    assert not irreducible["reducible_over_K"]


def test_gauss_lemma_witness_iff_not_integrally_closed():
    for entry in catalog():
        order = catalog_order(entry)
        witness = entry["gauss_lemma_witness"]
        closed = is_integrally_closed(order)
        assert (witness is None) == closed, entry["name"]
        if witness is not None:
            rep = gauss_lemma_check(
                order,
                order.element(*witness["b"]),
                order.element(*witness["c"]),
            )
            assert rep["reducible_over_K"] and not rep["reducible_over_O"]
        else:
            # integrally closed: no monic quadratic may split over K only
            probes = [
                (order.element(1), order.element(1)),
                (order.element(0), order.element(-4)),
                (order.element(-1), order.element(-1)),
                (order.element(0, 1), order.element(0)),
            ]
            for b, c in probes:
                rep = gauss_lemma_check(order, b, c)
                assert rep["reducible_over_K"] == rep["reducible_over_O"]
