"""Uniformizers, Kummer multiplicity vs the lattice oracle, divisibility."""

import random

import pytest

from kummerlab.arith import primes_below, valuation_int
from kummerlab.cyclotomic import cyclotomic_ring, norm
from kummerlab.idealprimes import enumerate_jacobi_maps, map_for_root
from kummerlab.valuation import (
    UniformizerSearchError,
    divides,
    divisibility_step,
    exact_quotient,
    factorize,
    find_uniformizer,
    is_defined_at,
    is_defined_at_by_valuation,
    kummer_prime,
    multiplicity,
    valuation_oracle,
)

RNG_SEED = 52361


def _elements(lam, count, seed, spread=4):
    rng = random.Random(seed)
    ring = cyclotomic_ring(lam)
    out = []
    while len(out) < count:
        x = ring.element([rng.randint(-spread, spread) for _ in range(lam - 1)])
        if not x.is_zero():
            out.append(x)
    return out


def test_uniformizer_certificate_split():
    maps = enumerate_jacobi_maps(5, 11)
    for phi in maps:
        K = find_uniformizer(phi)
        assert phi.kills(K.psi)
        assert K.period_norm % 11 == 0
        assert (K.period_norm // 11) % 11 != 0
        assert K.certificate()["divisible_once"]
    # 2 + alpha certifiably uniformizes the xi = 9 map; alpha - 3 is
    # rejected for the xi = 3 map because its norm is 121
    ring = maps[0].ring
    assert map_for_root(maps, 9).kills(ring.element([2, 1]))
    assert norm(ring.element([2, 1])) == 11
    rejected = ring.alpha() - ring.element(3)
    assert map_for_root(maps, 3).kills(rejected)
    assert norm(rejected) == 121


def test_uniformizer_ramified():
    # the certificate asks only that lam divide the norm exactly once;
    # coprime extra content is harmless
    for lam in (3, 5, 7):
        phi = enumerate_jacobi_maps(lam, lam)[0]
        K = find_uniformizer(phi)
        assert valuation_int(K.period_norm, lam) == 1
        assert phi.kills(K.psi)
    K3 = find_uniformizer(enumerate_jacobi_maps(3, 3)[0])
    assert abs(K3.period_norm) == 3
    # 1 - alpha is itself a certified uniformizer for the ramified prime
    ring = cyclotomic_ring(3)
    assert norm(ring.one() - ring.alpha()) == 3


def test_uniformizer_inert_is_q():
    phi = enumerate_jacobi_maps(5, 47)[0]  # 47 has order 4 mod 5
    K = find_uniformizer(phi)
    assert K.psi == phi.ring.element(47)
    assert K.psi_conjugates == phi.ring.one()
    assert K.period_norm == 47


def test_uniformizer_bound_exhaustion():
    # no element of Z[zeta_3] with period coefficients bounded by 6 has
    # norm exactly divisible by 193 (minimal representations need
    # coefficients near sqrt(p)), so the search must report its bound
    phi = enumerate_jacobi_maps(3, 193)[0]
    assert phi.f == 1  # 193 = 1 mod 3 splits
    with pytest.raises(UniformizerSearchError) as err:
        find_uniformizer(phi, bound=3, max_bound=6)
    assert "bound 6" in str(err.value)


def test_uniformizer_psi_conjugate_product_definition():
    # Psi must equal the product of the e-1 nontrivial period conjugates
    from kummerlab.cyclotomic import conjugate

    for lam, p in [(5, 11), (5, 19), (7, 29)]:
        for phi in enumerate_jacobi_maps(lam, p):
            K = kummer_prime(phi)
            prod = K.periods.ring.one()
            current = K.psi
            for _ in range(K.periods.e - 1):
                current = conjugate(current, K.periods.g)
                prod = prod * current
            assert prod == K.psi_conjugates
            assert (K.psi * K.psi_conjugates) == K.periods.ring.element(
                K.period_norm
            )


def test_multiplicity_pinned():
    ring = cyclotomic_ring(5)
    for phi in enumerate_jacobi_maps(5, 11):
        assert multiplicity(ring.element(11), kummer_prime(phi)) == 1
    ram = kummer_prime(enumerate_jacobi_maps(5, 5)[0])
    pi = ring.one() - ring.alpha()
    assert multiplicity(pi**4, ram) == 4
    assert multiplicity(ring.element(5), ram) == 4
    assert multiplicity(ring.alpha(), ram) == 0


def test_multiplicity_zero_when_not_killed():
    ring = cyclotomic_ring(5)
    phi = map_for_root(enumerate_jacobi_maps(5, 11), 3)
    x = ring.element([1, 1])
    assert not phi.kills(x)
    assert multiplicity(x, kummer_prime(phi)) == 0


def test_multiplicity_of_zero_raises():
    phi = enumerate_jacobi_maps(5, 11)[0]
    with pytest.raises(ValueError):
        multiplicity(phi.ring.zero(), kummer_prime(phi))
    with pytest.raises(ValueError):
        valuation_oracle(phi.ring.zero(), phi)


def test_oracle_example_3_7():
    ring = cyclotomic_ring(3)
    x = ring.element([3, 1])
    assert norm(x) == 7
    for phi in enumerate_jacobi_maps(3, 7):
        assert valuation_oracle(x, phi) == multiplicity(x, kummer_prime(phi))
    assert sorted(
        valuation_oracle(x, phi) for phi in enumerate_jacobi_maps(3, 7)
    ) == [0, 1]


def _all_kummer_primes(lam, bound):
    out = []
    for p in primes_below(bound + 1):
        for phi in enumerate_jacobi_maps(lam, p):
            out.append(kummer_prime(phi))
    return out


@pytest.mark.parametrize("lam", [3, 5, 7])
def test_kummer_vs_oracle_corpus(lam):
    primes = _all_kummer_primes(lam, 50)
    for x in _elements(lam, 60, RNG_SEED + lam):
        nval = norm(x)
        for K in primes:
            mu = multiplicity(x, K)
            assert mu == valuation_oracle(x, K.map)
            # finiteness bound from the norm
            assert mu <= valuation_int(nval, K.q) * (lam - 1)
            # gap regression: the divisibility set is exactly [0, mu]
            for step in range(mu + 1):
                assert divisibility_step(x, K, step)
            assert not divisibility_step(x, K, mu + 1)


@pytest.mark.parametrize("lam", [3, 5, 7])
def test_valuation_axioms(lam):
    rng = random.Random(RNG_SEED + 10 * lam)
    primes = _all_kummer_primes(lam, 50)
    ring = cyclotomic_ring(lam)
    pairs = 0
    while pairs < 40:
        x = ring.element([rng.randint(-4, 4) for _ in range(lam - 1)])
        y = ring.element([rng.randint(-4, 4) for _ in range(lam - 1)])
        if x.is_zero() or y.is_zero():
            continue
        pairs += 1
        s = x + y
        for K in primes:
            assert multiplicity(x * y, K) == multiplicity(x, K) + multiplicity(y, K)
            if not s.is_zero():
                assert multiplicity(s, K) >= min(
                    multiplicity(x, K), multiplicity(y, K)
                )


def test_defined_at_pinned():
    ring = cyclotomic_ring(5)
    maps = enumerate_jacobi_maps(5, 11)
    phi9 = map_for_root(maps, 9)
    eleven = ring.element(11)
    d = ring.element([2, 1])
    for phi in maps:
        assert is_defined_at(eleven, ring.one(), phi)  # x/1 always defined
    assert is_defined_at(eleven, d, phi9)
    K9 = kummer_prime(phi9)
    assert multiplicity(eleven, K9) == 1 == multiplicity(d, K9)
    q = exact_quotient(d, eleven)
    assert valuation_oracle(q, phi9) == 0
    assert sorted(valuation_oracle(q, m) for m in maps) == [0, 1, 1, 1]
    with pytest.raises(ZeroDivisionError):
        is_defined_at(eleven, ring.zero(), phi9)


def test_defined_at_routes_agree_and_dichotomy():
    rng = random.Random(RNG_SEED + 99)
    for lam in (3, 5):
        ring = cyclotomic_ring(lam)
        primes = _all_kummer_primes(lam, 30)
        pairs = 0
        while pairs < 100:
            x = ring.element([rng.randint(-4, 4) for _ in range(lam - 1)])
            y = ring.element([rng.randint(-4, 4) for _ in range(lam - 1)])
            if x.is_zero() or y.is_zero():
                continue
            pairs += 1
            for K in primes:
                colon_route = is_defined_at(x, y, K.map)
                valuation_route = is_defined_at_by_valuation(x, y, K)
                assert colon_route == valuation_route
                # the dichotomy: defined at the fraction or its inverse
                assert colon_route or is_defined_at(y, x, K.map)


def test_factorize_pinned():
    ring = cyclotomic_ring(5)
    assert factorize(ring.one()).records == ()
    one_minus = factorize(ring.one() - ring.alpha())
    assert [(r.map.p, r.map.label(), r.mu) for r in one_minus.nonzero()] == [
        (5, 1, 1)
    ]
    two_plus = factorize(ring.element([2, 1]))
    assert [(r.map.p, r.map.label(), r.mu) for r in two_plus.nonzero()] == [
        (11, 9, 1)
    ]
    assert len(two_plus.records) == 4  # all maps of 11 are recorded
    with pytest.raises(ValueError):
        factorize(ring.zero())


def test_factorize_norm_consistency():
    for lam in (3, 5, 7):
        for x in _elements(lam, 25, RNG_SEED + 1000 + lam):
            fact = factorize(x)
            nval = fact.norm_value
            assert nval == norm(x)
            by_prime: dict[int, int] = {}
            for r in fact.records:
                by_prime[r.map.p] = by_prime.get(r.map.p, 0) + r.map.f * r.mu
            for p, total in by_prime.items():
                assert total == valuation_int(nval, p)


def test_divides_pinned():
    ring = cyclotomic_ring(5)
    pi = ring.one() - ring.alpha()
    five = ring.element(5)
    assert divides(pi, five)
    assert not divides(pi**5, five)
    assert divides(ring.element([2, 1]), ring.element(11))
    assert divides(pi, pi)
    assert divides(pi, ring.zero())
    with pytest.raises(ZeroDivisionError):
        divides(ring.zero(), five)


def test_exact_quotient():
    ring = cyclotomic_ring(5)
    x = ring.element([1, -2, 0, 3])
    d = ring.element([2, 1, 1, 0])
    prod = x * d
    assert exact_quotient(d, prod) == x
    assert exact_quotient(d, ring.one()) is None


def test_completeness_property():
    # whenever every map is defined at x/y the quotient is integral
    rng = random.Random(RNG_SEED + 7)
    from kummerlab.arith import factorize_int

    ring = cyclotomic_ring(5)
    cases = 0
    while cases < 60:
        x = ring.element([rng.randint(-4, 4) for _ in range(4)])
        y = ring.element([rng.randint(-3, 3) for _ in range(4)])
        if x.is_zero() or y.is_zero():
            continue
        if cases % 2:
            x = x * y  # force divisibility half the time
        cases += 1
        defined_everywhere = all(
            is_defined_at(x, y, phi)
            for p in sorted(factorize_int(norm(y)))
            for phi in enumerate_jacobi_maps(5, p)
        )
        quotient = exact_quotient(y, x)
        assert defined_everywhere == (quotient is not None)
        assert divides(y, x) == defined_everywhere
