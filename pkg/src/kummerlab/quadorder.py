"""Quadratic orders Z[theta]: where the ideal-prime construction breaks.

theta has monic minimal polynomial T^2 + u T + v; the order is Z + Z theta.
Reduction maps onto finite fields exist exactly as in the cyclotomic case,
but for a non-maximal order the maps at primes dividing the conductor fail
to extend to fractions in either direction, Gauss's Lemma for monic
polynomials fails, and prime-ideal powers collapse (p^2 = (2) p without
p = (2) in Z[sqrt(-3)]).  All definedness decisions run through the exact
colon-lattice test.
"""

import json
from fractions import Fraction
from importlib import resources
from math import isqrt

from kummerlab.arith import is_prime, squarefree_decomposition
from kummerlab.ffield import FieldElement, FiniteField
from kummerlab.lattice import (
    IntLattice,
    MultTable,
    hnf,
    kernel_mod,
    principal_lattice,
)
from kummerlab.polymod import factor_mod_p


class QuadOrder:
    """The order Z[theta] with theta^2 = -u theta - v."""

    def __init__(self, u: int, v: int):
        disc = u * u - 4 * v
        root = isqrt(abs(disc))
        if disc == 0 or (disc > 0 and root * root == disc):
            raise ValueError("discriminant must not be a perfect square")
        self.u = u
        self.v = v
        self.disc = disc

    def element(self, x: int, y: int = 0) -> "QuadElement":
        return QuadElement(self, x, y)

    def mult_table(self) -> MultTable:
        return (
            ((1, 0), (0, 1)),
            ((0, 1), (-self.v, -self.u)),
        )

    def minimal_polynomial(self) -> list[int]:
        return [self.v, self.u, 1]

    def __eq__(self, other):
        return isinstance(other, QuadOrder) and (self.u, self.v) == (
            other.u,
            other.v,
        )

    def __hash__(self):
        return hash(("QuadOrder", self.u, self.v))

    def __repr__(self):
        return f"QuadOrder(u={self.u}, v={self.v})"


class QuadElement:
    __slots__ = ("order", "x", "y")

    def __init__(self, order: QuadOrder, x: int, y: int):
        self.order = order
        self.x = x
        self.y = y

    def coords(self) -> tuple[int, int]:
        return (self.x, self.y)

    def __add__(self, other):
        return QuadElement(self.order, self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return QuadElement(self.order, self.x - other.x, self.y - other.y)

    def __mul__(self, other):
        u, v = self.order.u, self.order.v
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        return QuadElement(
            self.order,
            x1 * x2 - v * y1 * y2,
            x1 * y2 + y1 * x2 - u * y1 * y2,
        )

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def norm(self) -> int:
        u, v = self.order.u, self.order.v
        return self.x * self.x - u * self.x * self.y + v * self.y * self.y

    def __eq__(self, other):
        return (
            isinstance(other, QuadElement)
            and self.order == other.order
            and (self.x, self.y) == (other.x, other.y)
        )

    def __repr__(self):
        return f"QuadElement({self.x} + {self.y}*theta)"


class QuadJacobiMap:
    """A surjective homomorphism Z[theta] -> F_p or F_{p^2}."""

    __slots__ = ("order", "p", "f", "factor", "field", "image")

    def __init__(self, order: QuadOrder, p: int, factor: tuple[int, ...]):
        self.order = order
        self.p = p
        self.factor = tuple(factor)
        self.f = len(factor) - 1
        self.field = FiniteField(p, factor)
        self.image = self.field.generator()

    def apply(self, elt: QuadElement) -> FieldElement:
        if elt.order != self.order:
            raise ValueError("element belongs to a different order")
        return self.field.element(elt.x) + self.image.scale(elt.y)

    def kills(self, elt: QuadElement) -> bool:
        return self.apply(elt).is_zero()

    def kernel(self) -> IntLattice:
        f = self.f
        rows = [
            [1] + [0] * (f - 1),
            list(self.image.coeffs) + [0] * (f - len(self.image.coeffs)),
        ]
        lattice = kernel_mod(rows, self.p)
        assert lattice.index() == self.p**f
        return lattice

    def label(self):
        if self.f == 1:
            return self.image.residue()
        return list(self.image.coeffs)

    def __repr__(self):
        return f"QuadJacobiMap(p={self.p}, theta->{self.label()})"


def enumerate_quad_maps(order: QuadOrder, p: int) -> list[QuadJacobiMap]:
    """One map per root of the minimal polynomial mod p (a repeated root
    yields a single map), or one degree-2 map when it stays irreducible."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = factor_mod_p(order.minimal_polynomial(), p)
    return [QuadJacobiMap(order, p, tuple(fac)) for fac, _ in factors]


def dichotomy_check(
    order: QuadOrder,
    phi: QuadJacobiMap,
    numerator: QuadElement,
    denominator: QuadElement,
) -> dict:
    """Is the map defined at the fraction, at its inverse, or at neither?

    Decided by the colon-lattice test on both sides.  A (False, False)
    outcome witnesses the failure of the valuation dichotomy, which happens
    only at primes dividing the conductor.
    """
    if numerator.is_zero() or denominator.is_zero():
        raise ValueError("numerator and denominator must be nonzero")
    table = order.mult_table()
    kernel = phi.kernel()

    def defined(num: QuadElement, den: QuadElement) -> bool:
        den_lattice = principal_lattice(list(den.coords()), table)
        col = den_lattice.colon(list(num.coords()), table)
        return not kernel.contains_lattice(col)

    return {
        "at_fraction": defined(numerator, denominator),
        "at_inverse": defined(denominator, numerator),
    }


def prime_square_anomaly() -> dict:
    """In Z[sqrt(-3)]: p = (2, 1+theta) satisfies p^2 = (2) p yet p != (2).

    In the maximal order Z[(1+sqrt(-3))/2] the phenomenon disappears: the
    minimal polynomial stays irreducible mod 2, so (2) is itself prime.
    """
    order = QuadOrder(0, 3)
    table = order.mult_table()
    two = principal_lattice([2, 0], table)
    p_ideal = hnf([[2, 0], [1, 1], [0, 2], [-3, 1]])
    p_squared = p_ideal.product(p_ideal, table)
    two_p = two.product(p_ideal, table)
    maximal = QuadOrder(-1, 1)
    maps_of_two = enumerate_quad_maps(maximal, 2)
    return {
        "p_index": p_ideal.index(),
        "two_index": two.index(),
        "p_squared_index": p_squared.index(),
        "two_p_index": two_p.index(),
        "p_squared_equals_two_p": p_squared == two_p,
        "p_equals_two": p_ideal == two,
        "maximal_order_two_inert": len(maps_of_two) == 1
        and maps_of_two[0].f == 2,
        "holds": p_squared == two_p
        and p_ideal != two
        and len(maps_of_two) == 1
        and maps_of_two[0].f == 2,
    }


def conductor(order: QuadOrder) -> int:
    """Index of the order in the maximal order, from the discriminants."""
    s, d = squarefree_decomposition(order.disc)
    field_disc = d if d % 4 == 1 else 4 * d
    ratio = order.disc // field_disc
    f = isqrt(ratio)
    assert f * f == ratio
    return f


def is_integrally_closed(order: QuadOrder) -> bool:
    return conductor(order) == 1


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _field_sqrt(order: QuadOrder, d0: Fraction, d1: Fraction):
    """A square root of d0 + d1 theta in Q(theta), or None.

    Solving (x + y theta)^2 = delta reduces to a quadratic in y^2 with
    rational coefficients; everything is decided by exact rational square
    tests.
    """
    u, v = order.u, order.v
    if d1 == 0:
        x = _rational_sqrt(d0)
        if x is not None:
            return (x, Fraction(0))
        # fall through: delta may still be a square with y != 0
    disc = Fraction(u * u - 4 * v)
    a2 = disc
    a1 = 2 * u * d1 - 4 * d0
    a0 = d1 * d1
    inner = a1 * a1 - 4 * a2 * a0
    root = _rational_sqrt(inner)
    if root is None:
        return None
    for sign in (1, -1):
        z = (-a1 + sign * root) / (2 * a2)
        y = _rational_sqrt(z)
        if y is None or y == 0:
            continue
        x = (d1 + u * y * y) / (2 * y)
        if (x * x - v * y * y, 2 * x * y - u * y * y) == (d0, d1):
            return (x, y)
    return None


def gauss_lemma_check(order: QuadOrder, b: QuadElement, c: QuadElement) -> dict:
    """Reducibility of the monic quadratic T^2 + bT + c over K versus O.

    Over K the polynomial splits iff b^2 - 4c is a square there; over O it
    splits iff the roots additionally have integer coordinates.
    """
    if b.order != order or c.order != order:
        raise ValueError("coefficients must lie in the order")
    delta = b * b - QuadElement(order, 4, 0) * c
    s = _field_sqrt(order, Fraction(delta.x), Fraction(delta.y))
    if s is None:
        return {"reducible_over_K": False, "reducible_over_O": False}
    sx, sy = s
    roots = [
        ((-b.x + sgn * sx) / 2, (-b.y + sgn * sy) / 2) for sgn in (1, -1)
    ]
    in_order = all(
        rx.denominator == 1 and ry.denominator == 1 for rx, ry in roots
    )
    return {
        "reducible_over_K": True,
        "reducible_over_O": in_order,
        "roots": [[str(rx), str(ry)] for rx, ry in roots],
    }


def catalog() -> list[dict]:
    """The fixed catalog of test orders, loaded from the package data file."""
    data = resources.files("kummerlab.data").joinpath("quad_orders.json")
    return json.loads(data.read_text())["orders"]


def catalog_order(entry: dict) -> QuadOrder:
    return QuadOrder(entry["u"], entry["v"])
