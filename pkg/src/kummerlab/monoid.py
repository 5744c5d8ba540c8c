"""Hilbert monoids: divisor theory on congruence monoids of natural numbers.

M is the set of naturals whose residue mod m lies in a subgroup H of
(Z/mZ)^*.  Factorization into irreducibles is generally non-unique, but
every rational prime p coprime to m acts as an "ideal prime" through the
reduction map onto F_p, and unique factorization into these ideal primes
holds with exponents equal to the ordinary ones.  The class group is G/H.

The singular monoid N (naturals = 0, 1, 2 mod 4) uses a residue set that is
not a subgroup; there the extension of the reduction map to fractions
breaks down in exactly the way square roots do.
"""

from math import gcd, isqrt

from kummerlab.arith import factorize_int, is_prime


class HilbertMonoid:
    """Naturals with residue mod m in the subgroup H of (Z/mZ)^*."""

    def __init__(self, m: int, subgroup):
        if m <= 1:
            raise ValueError("modulus must exceed 1")
        H = sorted({h % m for h in subgroup})
        if 1 not in H:
            raise ValueError("subgroup must contain 1")
        for a in H:
            if gcd(a, m) != 1:
                raise ValueError(f"residue {a} is not a unit mod {m}")
            for b in H:
                if (a * b) % m not in H:
                    raise ValueError("residue set is not closed under products")
        self.m = m
        self.subgroup = tuple(H)

    def __contains__(self, a: int) -> bool:
        return a >= 1 and a % self.m in self.subgroup

    def units_mod_m(self) -> list[int]:
        return [a for a in range(1, self.m) if gcd(a, self.m) == 1]

    def __repr__(self):
        return f"HilbertMonoid(m={self.m}, H={list(self.subgroup)})"


class SingularMonoid:
    """The fixed monoid of naturals congruent to 0, 1, or 2 mod 4."""

    m = 4
    residues = (0, 1, 2)

    def __contains__(self, a: int) -> bool:
        return a >= 1 and a % 4 in self.residues

    def __repr__(self):
        return "SingularMonoid(residues 0,1,2 mod 4)"


def _divisors(a: int) -> list[int]:
    out = []
    for d in range(1, isqrt(a) + 1):
        if a % d == 0:
            out.append(d)
            if d != a // d:
                out.append(a // d)
    return sorted(out)


def is_irreducible(M: HilbertMonoid, a: int) -> bool:
    if a not in M or a == 1:
        return False
    return not any(
        d in M and a // d in M for d in _divisors(a) if 1 < d < a
    )


def factor_into_irreducibles(
    M: HilbertMonoid, a: int, all_factorizations: bool = False
):
    """One factorization into irreducibles, or all of them.

    Exhaustive search over monoid divisors, ascending, so the first
    factorization found is the lexicographically least; with
    ``all_factorizations`` every multiset with the given product is
    returned, sorted.
    """
    if a not in M:
        raise ValueError(f"{a} is not in {M!r}")
    results: list[tuple[int, ...]] = []

    def recurse(remaining: int, least: int, chosen: tuple[int, ...]):
        if remaining == 1:
            results.append(chosen)
            return not all_factorizations
        for d in _divisors(remaining):
            if d < least or d == 1:
                continue
            if d in M and is_irreducible(M, d) and remaining // d in M:
                if recurse(remaining // d, d, chosen + (d,)):
                    return True
        return False

    recurse(a, 2, ())
    results.sort()
    return results if all_factorizations else results[0]


class MonoidIdealPrime:
    """The ideal prime of M attached to the reduction map onto F_p."""

    __slots__ = ("monoid", "p")

    def __init__(self, monoid: HilbertMonoid, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if gcd(p, monoid.m) != 1:
            raise ValueError(
                f"prime {p} divides the modulus {monoid.m}: outside theory"
            )
        self.monoid = monoid
        self.p = p

    @property
    def residue_class(self) -> int:
        return self.p % self.monoid.m

    def is_principal(self) -> bool:
        return self.residue_class in self.monoid.subgroup

    def __repr__(self):
        return f"MonoidIdealPrime(p={self.p})"


def ideal_factorization(M: HilbertMonoid, a: int) -> list[tuple[MonoidIdealPrime, int]]:
    """Unique factorization of a into ideal primes (ordinary exponents)."""
    if a not in M:
        raise ValueError(f"{a} is not in {M!r}")
    if gcd(a, M.m) != 1:
        raise ValueError(f"{a} shares a factor with the modulus: outside theory")
    out = [
        (MonoidIdealPrime(M, p), e) for p, e in sorted(factorize_int(a).items())
    ]
    cls = 1
    for prime, e in out:
        cls = cls * pow(prime.residue_class, e, M.m) % M.m
    if cls not in M.subgroup:
        raise AssertionError("class product of an element of M must lie in H")
    return out


def _residue_set(M) -> tuple[int, ...]:
    if isinstance(M, HilbertMonoid):
        return M.subgroup
    return M.residues


def defined_at(M, p: int, a: int, b: int) -> dict:
    """Extend the reduction map mod p to the fraction a/b of Q(M).

    The fraction equals c/d for c, d in M exactly when (c, d) = (a0*s, b0*s)
    for the lowest-terms pair (a0, b0) and a natural scale s; membership and
    p-divisibility of the scaled pair only depend on s mod m*p, so the
    search is finite.  Returns the decision, the finite value when defined,
    and "oo" when the reciprocal takes the value 0.
    """
    if a not in M or b not in M:
        raise ValueError("both entries must be elements of the monoid")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = M.m
    residues = _residue_set(M)
    g = gcd(a, b)
    a0, b0 = a // g, b // g

    def witness(num: int, den: int):
        for s in range(1, m * p + 1):
            if (num * s) % m in residues and (den * s) % m in residues:
                if (den * s) % p != 0:
                    return s
        return None

    s = witness(a0, b0)
    if s is not None:
        value = a0 * s % p * pow(b0 * s % p, -1, p) % p
        return {"defined": True, "value": value}
    s_inv = witness(b0, a0)
    if s_inv is not None and (b0 * s_inv) % p == 0:
        return {"defined": False, "value": "oo"}
    return {"defined": False, "value": None}


def uniformizer(M: HilbertMonoid, p: int) -> int:
    """p itself when its class is principal, else p times the least
    corrector r with [r] = [p]^{-1}, r coprime to p."""
    prime = MonoidIdealPrime(M, p)
    if prime.is_principal():
        return p
    target = pow(prime.residue_class, -1, M.m)
    r = target
    while True:
        if r % M.m == target and gcd(r, p) == 1 and r > 1:
            return p * r
        r += M.m


def multiplicity_monoid(M: HilbertMonoid, p: int, a: int, q: int | None = None) -> int:
    """Largest mu with the map defined at a / q**mu, q a uniformizer for p."""
    if a not in M:
        raise ValueError(f"{a} is not in {M!r}")
    if q is None:
        q = uniformizer(M, p)
    mu = 0
    while defined_at(M, p, a, q ** (mu + 1))["defined"]:
        mu += 1
    return mu


def class_group(M: HilbertMonoid) -> dict:
    """Cosets of H in G with their multiplication table and the invariant
    factors identifying the abelian group."""
    units = M.units_mod_m()
    H = set(M.subgroup)
    cosets: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for u in units:
        if u not in seen:
            coset = tuple(sorted(u * h % M.m for h in H))
            cosets.append(coset)
            seen.update(coset)
    cosets.sort()
    index = {c: i for i, c in enumerate(cosets)}

    def mul(i: int, j: int) -> int:
        rep = cosets[i][0] * cosets[j][0] % M.m
        coset = tuple(sorted(rep * h % M.m for h in H))
        return index[coset]

    n = len(cosets)
    table = [[mul(i, j) for j in range(n)] for i in range(n)]
    identity = index[tuple(sorted(M.subgroup))]

    def element_order(i: int) -> int:
        order = 1
        x = i
        while x != identity:
            x = mul(x, i)
            order += 1
        return order

    orders = sorted(element_order(i) for i in range(n))
    invariants = _abelian_invariants(n, orders)
    return {
        "order": n,
        "cosets": [list(c) for c in cosets],
        "table": table,
        "element_orders": orders,
        "invariant_factors": invariants,
        "isomorphic_to": " x ".join(f"C{d}" for d in invariants) if n > 1 else "C1",
    }


def _invariant_chains(n: int) -> list[list[int]]:
    """All chains d_1 | d_2 | ... with product n and every d_i > 1."""
    if n == 1:
        return [[]]
    out = []

    def recurse(remaining: int, max_d: int, chain: list[int]):
        if remaining == 1:
            out.append(list(reversed(chain)))
            return
        for d in _divisors(remaining):
            if 1 < d <= max_d and max_d % d == 0 and remaining % d == 0:
                recurse(remaining // d, d, chain + [d])

    recurse(n, n, [])
    return out


def _abelian_invariants(n: int, orders: list[int]) -> list[int]:
    """Invariant factors of an abelian group from its element-order multiset.

    The multiset of element orders determines a finite abelian group up to
    isomorphism, so matching against every invariant-factor chain of the
    right order is a complete decision procedure.
    """
    from itertools import product as iter_product
    from math import lcm

    for chain in _invariant_chains(n):
        model = sorted(
            lcm(*[d // gcd(x, d) for d, x in zip(chain, combo)], 1)
            for combo in iter_product(*[range(d) for d in chain])
        )
        if model == orders:
            return chain
    raise AssertionError("element orders must match some abelian group")


def square_test(M: HilbertMonoid, a: int) -> dict:
    """Two routes to 'a is a square': integer root in M vs ideal exponents.

    The quotient-monoid route declares a square when all ideal exponents are
    even and the class of the square root lies in H; for Hilbert monoids the
    two answers always coincide.
    """
    if a not in M:
        raise ValueError(f"{a} is not in {M!r}")
    r = isqrt(a)
    in_m = r * r == a and r in M
    if r * r != a:
        in_qm = False
    else:
        factors = ideal_factorization(M, a)
        if any(e % 2 for _, e in factors):
            in_qm = False
        else:
            cls = 1
            for prime, e in factors:
                cls = cls * pow(prime.residue_class, e // 2, M.m) % M.m
            in_qm = cls in M.subgroup
    return {"square_in_M": in_m, "square_in_QM": in_qm}


def singular_monoid_report() -> dict:
    """The documented failures of the reduction map mod 2 on N.

    Both 6/2 and 2/6 are outside the map's reach, and 9 is a square in Q(N)
    (witness (6/2)^2) while having no square root in N.
    """
    N = SingularMonoid()
    at_62 = defined_at(N, 2, 6, 2)
    at_26 = defined_at(N, 2, 2, 6)
    nine_root_in_n = 3 in N
    # 9 = (6/2)^2 in Q(N): verify 6*6 = 9*2*2 exactly.
    witness = 6 * 6 == 9 * 2 * 2
    return {
        "defined_at_6_over_2": at_62["defined"],
        "defined_at_2_over_6": at_26["defined"],
        "nine_square_in_QN": witness,
        "nine_square_in_N": nine_root_in_n,
        "holds": (
            not at_62["defined"]
            and not at_26["defined"]
            and witness
            and not nine_root_in_n
        ),
    }
