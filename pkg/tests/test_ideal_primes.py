"""Jacobi map enumeration, application, period residues, kernels."""

import random

import pytest

from kummerlab.arith import multiplicative_order, primes_below
from kummerlab.cyclotomic import cyclotomic_ring, gaussian_periods
from kummerlab.idealprimes import (
    conjugate_lattice,
    conjugated_map,
    enumerate_jacobi_maps,
    map_for_root,
)
from kummerlab.lattice import IntLattice

RNG_SEED = 77911


def test_enumerate_split():
    maps = enumerate_jacobi_maps(5, 11)
    assert sorted(m.label() for m in maps) == [3, 4, 5, 9]
    assert all(m.f == 1 for m in maps)


def test_enumerate_inert():
    maps = enumerate_jacobi_maps(5, 2)
    assert len(maps) == 1
    phi = maps[0]
    assert phi.f == 4 and phi.field.order == 16
    xi = phi.apply(phi.ring.alpha())
    assert (xi**5).coeffs == (1,)


def test_enumerate_ramified():
    maps = enumerate_jacobi_maps(5, 5)
    assert len(maps) == 1
    phi = maps[0]
    ring = phi.ring
    assert phi.apply(ring.alpha()).residue() == 1
    assert phi.kills(ring.one() - ring.alpha())


def test_enumerate_rejects_bad_conductor():
    with pytest.raises(ValueError):
        enumerate_jacobi_maps(4, 11)
    with pytest.raises(ValueError):
        enumerate_jacobi_maps(2, 11)


def test_census_counts():
    for lam in (3, 5, 7, 11, 13):
        for p in primes_below(200):
            maps = enumerate_jacobi_maps(lam, p)
            if p == lam:
                assert len(maps) == 1
            else:
                assert len(maps) == (lam - 1) // multiplicative_order(p, lam)
            assert len({m.factor for m in maps}) == len(maps)


def test_apply_pinned():
    maps = enumerate_jacobi_maps(5, 11)
    phi3 = map_for_root(maps, 3)
    ring = phi3.ring
    assert phi3.apply(ring.zero()).is_zero()
    assert phi3.apply(ring.element([2, 1])).residue() == 5
    with pytest.raises(ValueError):
        phi3.apply(cyclotomic_ring(7).alpha())


def test_apply_is_homomorphism():
    rng = random.Random(RNG_SEED)
    for lam, p in [(5, 11), (5, 2), (7, 13), (3, 3)]:
        for phi in enumerate_jacobi_maps(lam, p):
            ring = phi.ring
            for _ in range(40):
                x = ring.element([rng.randint(-9, 9) for _ in range(lam - 1)])
                y = ring.element([rng.randint(-9, 9) for _ in range(lam - 1)])
                assert phi.apply(x + y) == phi.apply(x) + phi.apply(y)
                assert phi.apply(x * y) == phi.apply(x) * phi.apply(y)


def test_kernel_primality_surrogate():
    rng = random.Random(RNG_SEED + 1)
    for phi in enumerate_jacobi_maps(5, 11) + enumerate_jacobi_maps(5, 2):
        ring = phi.ring
        found = 0
        while found < 20:
            x = ring.element([rng.randint(-6, 6) for _ in range(4)])
            y = ring.element([rng.randint(-6, 6) for _ in range(4)])
            if phi.kills(x * y):
                found += 1
                assert phi.kills(x) or phi.kills(y)


def test_period_residues_pinned():
    sys52 = gaussian_periods(5, 2)
    vectors = sorted(m.period_residues(sys52) for m in enumerate_jacobi_maps(5, 19))
    assert vectors == [(4, 14), (14, 4)]
    for u0, u1 in vectors:
        assert (u0 * u0 + u0 - 1) % 19 == 0  # roots of the period polynomial
    phi3 = map_for_root(enumerate_jacobi_maps(5, 11), 3)
    assert phi3.period_residues(gaussian_periods(5, 4)) == (3, 9, 4, 5)


def test_period_residue_sums():
    sys52 = gaussian_periods(5, 2)
    for p in (19, 29):
        for phi in enumerate_jacobi_maps(5, p):
            assert sum(phi.period_residues(sys52)) % p == p - 1


def test_period_residues_are_rotations():
    for lam, e, p in [(5, 2, 19), (7, 2, 2), (13, 4, 3)]:
        system = gaussian_periods(lam, e)
        vectors = [m.period_residues(system) for m in enumerate_jacobi_maps(lam, p)]
        base = vectors[0]
        rotations = {
            tuple(base[(i + j) % e] for i in range(e)) for j in range(e)
        }
        assert set(vectors) <= rotations
        assert len(set(vectors)) == len(vectors)


def test_period_residue_degree_mismatch():
    phi = enumerate_jacobi_maps(5, 19)[0]  # f = 2
    with pytest.raises(ValueError):
        phi.period_residues(gaussian_periods(5, 4))


def test_kernel_pinned():
    phi3 = map_for_root(enumerate_jacobi_maps(5, 11), 3)
    kernel = phi3.kernel()
    assert kernel.index() == 11
    assert [11, 0, 0, 0] in kernel
    assert [-3, 1, 0, 0] in kernel  # alpha - 3
    inert = enumerate_jacobi_maps(5, 2)[0].kernel()
    assert inert.index() == 16
    assert [2, 0, 0, 0] in inert
    ram = enumerate_jacobi_maps(5, 5)[0].kernel()
    assert ram.index() == 5
    assert [5, 0, 0, 0] in ram and [1, -1, 0, 0] in ram


def test_kernel_closed_under_alpha_multiplication():
    for lam, p in [(5, 11), (5, 2), (7, 29)]:
        ring = cyclotomic_ring(lam)
        for phi in enumerate_jacobi_maps(lam, p):
            kernel = phi.kernel()
            shifted = kernel.transformed(
                lambda row: list((ring.element(list(row)) * ring.alpha()).coeffs)
            )
            assert kernel.contains_lattice(shifted)


def test_conjugation_action_and_transitivity():
    for lam, p in [(5, 11), (5, 19), (7, 2)]:
        maps = enumerate_jacobi_maps(lam, p)
        kernels = {m.kernel() for m in maps}
        base = maps[0]
        orbit = set()
        for k in range(1, lam):
            moved = conjugated_map(base, k)
            assert moved.kernel() == conjugate_lattice(
                base.kernel(), pow(k, -1, lam), lam
            )
            orbit.add(moved.kernel())
        assert orbit == kernels


def test_kernel_product_reconstructs_p():
    for lam, p in [(5, 11), (5, 19), (5, 2), (7, 13)]:
        ring = cyclotomic_ring(lam)
        table = ring.mult_table()
        maps = enumerate_jacobi_maps(lam, p)
        prod = IntLattice.standard(lam - 1)
        for phi in maps:
            prod = prod.product(phi.kernel(), table)
        assert prod.index() == p ** (lam - 1)
        assert prod == IntLattice.scaled_standard(lam - 1, p)
    # ramified: the kernel power reconstructs (lam)
    ring = cyclotomic_ring(5)
    ram = enumerate_jacobi_maps(5, 5)[0]
    power = ram.kernel().power(4, ring.mult_table())
    assert power == IntLattice.scaled_standard(4, 5)
