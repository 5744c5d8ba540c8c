"""Jacobi maps: the surjective homomorphisms Z[alpha] -> F_{p^f}.

For an odd prime conductor lam and a rational prime p, each irreducible
factor P_j of Phi_lam mod p yields one map: the target field is
F_p[X]/(P_j) itself and alpha goes to a root of P_j in it.  The kernel of
such a map is a maximal ideal of Z[alpha] -- an ideal prime of p.  Maps
with equal kernels are identified; each map carries a canonical root label,
the smallest element of the Frobenius orbit of its root.

For p = lam there is a single map, alpha -> 1 in F_lam.
"""

from functools import lru_cache

from kummerlab.arith import is_prime, multiplicative_order
from kummerlab.cyclotomic import (
    CyclotomicElement,
    PeriodSystem,
    cyclotomic_ring,
)
from kummerlab.ffield import FieldElement, FiniteField
from kummerlab.lattice import IntLattice, kernel_mod
from kummerlab.polyint import cyclotomic_polynomial
from kummerlab.polymod import factor_mod_p


class JacobiMap:
    """A surjective ring homomorphism Z[alpha] -> F_{p^f}."""

    __slots__ = ("lam", "p", "f", "factor", "field", "xi", "ring")

    def __init__(self, lam: int, p: int, factor: tuple[int, ...]):
        self.lam = lam
        self.p = p
        self.factor = tuple(factor)
        self.f = len(factor) - 1
        self.field = FiniteField(p, factor)
        self.ring = cyclotomic_ring(lam)
        root = self.field.generator()
        orbit = []
        x = root
        for _ in range(self.f):
            orbit.append(x)
            x = x**p
        pad = lambda e: tuple(e.coeffs) + (0,) * (self.f - len(e.coeffs))
        self.xi = min(orbit, key=pad)

    def apply(self, x: CyclotomicElement) -> FieldElement:
        """Evaluate the coefficient polynomial of x at xi."""
        if x.ring.n != self.lam:
            raise ValueError(
                f"element lives in conductor {x.ring.n}, map expects {self.lam}"
            )
        out = self.field.zero()
        for c in reversed(x.coeffs):
            out = out * self.xi + self.field.element(c)
        return out

    def kills(self, x: CyclotomicElement) -> bool:
        return self.apply(x).is_zero()

    def kernel(self) -> IntLattice:
        return _kernel_lattice(self.lam, self.p, self.factor)

    def period_residues(self, system: PeriodSystem) -> tuple[int, ...]:
        """Images of the Gaussian periods; always in the prime field."""
        if system.lam != self.lam:
            raise ValueError("period system has the wrong conductor")
        if system.e * self.f != self.lam - 1:
            raise ValueError(
                f"period count e={system.e} does not match residue degree "
                f"f={self.f}"
            )
        out = []
        for eta in system.periods:
            img = self.apply(eta)
            if not img.in_prime_field():
                raise AssertionError("period image must lie in the prime field")
            out.append(img.residue())
        return tuple(out)

    def label(self):
        """Canonical printable identity: root residue (f=1) or coefficients."""
        if self.f == 1:
            return self.xi.residue()
        return list(self.xi.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, JacobiMap)
            and (self.lam, self.p, self.factor)
            == (other.lam, other.p, other.factor)
        )

    def __hash__(self):
        return hash((self.lam, self.p, self.factor))

    def __repr__(self):
        return f"JacobiMap(lam={self.lam}, p={self.p}, xi={self.label()})"


@lru_cache(maxsize=None)
def _kernel_lattice(lam: int, p: int, factor: tuple[int, ...]) -> IntLattice:
    phi = JacobiMap(lam, p, factor)
    d = lam - 1
    f = phi.f
    rows = []
    power = phi.field.one()
    for _ in range(d):
        rows.append(
            list(power.coeffs) + [0] * (f - len(power.coeffs))
        )
        power = power * phi.xi
    lattice = kernel_mod(rows, p)
    if lattice.index() != p**f:
        raise AssertionError("kernel index must be p^f")
    return lattice


def enumerate_jacobi_maps(lam: int, p: int) -> list[JacobiMap]:
    """All Jacobi maps out of Z[alpha] for the prime p, in canonical order.

    For p = lam there is exactly one (alpha -> 1); otherwise one per
    irreducible factor of Phi_lam mod p, which is (lam-1)/f maps of residue
    degree f = order of p mod lam.
    """
    if not is_prime(lam) or lam == 2:
        raise ValueError(f"conductor {lam} must be an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = factor_mod_p(list(cyclotomic_polynomial(lam)), p)
    maps = [JacobiMap(lam, p, tuple(fac)) for fac, _ in factors]
    if p == lam:
        assert len(maps) == 1 and maps[0].apply(maps[0].ring.alpha()).residue() == 1
    else:
        assert len(maps) == (lam - 1) // multiplicative_order(p, lam)
    return maps


def map_for_root(maps: list[JacobiMap], residue: int) -> JacobiMap:
    """The degree-1 map sending alpha to the given residue."""
    for phi in maps:
        if phi.f == 1 and phi.xi.residue() == residue % phi.p:
            return phi
    raise ValueError(f"no degree-1 map with root {residue}")


def conjugate_lattice(lattice: IntLattice, k: int, lam: int) -> IntLattice:
    """Image of a coefficient lattice in Z[alpha] under sigma_k."""
    from kummerlab.cyclotomic import conjugate

    ring = cyclotomic_ring(lam)
    return lattice.transformed(
        lambda row: list(conjugate(ring.element(list(row)), k).coeffs)
    )


def conjugated_map(phi: JacobiMap, k: int) -> JacobiMap:
    """The map x -> phi(sigma_k(x)); its kernel is sigma_k^{-1}(ker phi)."""
    k_inv = pow(k, -1, phi.lam)
    target = conjugate_lattice(phi.kernel(), k_inv, phi.lam)
    for candidate in enumerate_jacobi_maps(phi.lam, phi.p):
        if candidate.kernel() == target:
            return candidate
    raise AssertionError("conjugated map must exist in the enumeration")
