"""Gauss and Jacobi sums, Jacobi's fundamental congruence, and the
prime-ideal support of J(chi, chi).

Sign conventions.  Two Jacobi-sum conventions are in circulation; both are
carried explicitly so every report can print both:

  jacobi_sum(chi, i, k)          = -sum_t chi^i(t) chi^k(1-t)
  jacobi_sum_positive(chi, i, k) = +sum_t chi^i(t) chi^k(1-t)

The first is the convention used throughout this module (it is the one
whose image under the substitution that sends the root of unity to a
primitive root mod p satisfies the fundamental congruence with a positive
binomial quotient); the second is the plain summation, the value of the
Gauss-sum ratio g_i g_k / g_{i+k}.  They differ only by sign, so every
modulus and valuation statement holds for both.
"""

from functools import lru_cache
from math import comb, isqrt

from kummerlab.arith import (
    discrete_log_table,
    is_prime,
    least_primitive_root,
)
from kummerlab.cyclotomic import (
    CyclotomicElement,
    conjugate,
    cyclotomic_ring,
    norm,
)
from kummerlab.idealprimes import enumerate_jacobi_maps, map_for_root
from kummerlab.polyint import cyclotomic_polynomial


class Character:
    """The character of order lam mod p with chi(g) = zeta, g the least
    primitive root.  Values live in Z[X]/(Phi_lam); chi(0) counts as 0 and
    is simply omitted from sums."""

    def __init__(self, p: int, lam: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if lam < 2 or (p - 1) % lam != 0:
            raise ValueError(f"order {lam} must divide p - 1 = {p - 1}")
        self.p = p
        self.lam = lam
        self.m = (p - 1) // lam
        self.g = least_primitive_root(p)
        self.index = discrete_log_table(p, self.g)
        self.ring = cyclotomic_ring(lam)

    def value(self, t: int, power: int = 1) -> CyclotomicElement:
        t %= self.p
        if t == 0:
            raise ValueError("character value at 0 is excluded from sums")
        return self.ring.alpha(power * self.index[t])

    def __repr__(self):
        return f"Character(p={self.p}, order={self.lam})"


@lru_cache(maxsize=None)
def character(p: int, lam: int) -> Character:
    """Shared Character instances; the discrete-log table is worth reusing."""
    return Character(p, lam)


def jacobi_sum(chi: Character, i: int, k: int) -> CyclotomicElement:
    """J(chi^i, chi^k) = -sum over t of chi^i(t) chi^k(1-t), exactly."""
    lam = chi.lam
    p = chi.p
    hist = [0] * lam
    for t in range(2, p):
        e = (i * chi.index[t] + k * chi.index[(1 - t) % p]) % lam
        hist[e] += 1
    return -chi.ring.element(hist)


def jacobi_sum_positive(chi: Character, i: int, k: int) -> CyclotomicElement:
    """The same sum without the leading minus (the Gauss-sum-ratio value)."""
    return -jacobi_sum(chi, i, k)


def reflection_identity(chi: Character, i: int, k: int) -> dict:
    """Verify J(chi^i, chi^k) * sigma_{-1}(J(chi^i, chi^k)) == p exactly."""
    lam = chi.lam
    if i % lam == 0 or k % lam == 0 or (i + k) % lam == 0:
        raise ValueError(
            f"degenerate index: i, k, i+k must all be nonzero mod {lam}"
        )
    j = jacobi_sum(chi, i, k)
    prod = j * conjugate(j, -1)
    ok = prod == chi.ring.element(chi.p)
    return {
        "p": chi.p,
        "order": lam,
        "i": i,
        "k": k,
        "J": list(j.coeffs),
        "psi": list((-j).coeffs),
        "product": list(prod.coeffs),
        "holds": ok,
    }


class GaussSumRing:
    """The tensor ring Z[X, Y] / (Phi_lam(X), Phi_p(Y)).

    Elements are phi(lam) x (p-1) coefficient matrices: the X-part carries
    the lam-th root of unity alpha, the Y-part the p-th root x.  Gauss sums
    (alpha^i, x) = sum_j alpha^{ij} x^{g^j} live here; their lam-th powers
    collapse into the X-part alone.
    """

    def __init__(self, lam: int, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.lam = lam
        self.p = p
        self.g = least_primitive_root(p)
        self.xdim = len(cyclotomic_polynomial(lam)) - 1
        self.ydim = p - 1
        self.xring = cyclotomic_ring(lam)

    def zero_matrix(self) -> list[list[int]]:
        return [[0] * self.p for _ in range(self.lam)]

    def reduce(self, raw: list[list[int]]) -> "TensorElement":
        """Reduce a lam x p exponent array modulo both cyclotomic relations."""
        lam, p = self.lam, self.p
        # X-direction: divide each Y-column by Phi_lam.
        cols = []
        for b in range(p):
            col = [raw[a][b] for a in range(lam)]
            cols.append(list(self.xring._reduce(col)))
        # Y-direction: Y^{p-1} = -(1 + Y + ... + Y^{p-2}).
        mat = []
        for a in range(self.xdim):
            row = [cols[b][a] for b in range(p)]
            top = row[p - 1]
            if top:
                row = [c - top for c in row[: p - 1]]
            else:
                row = row[: p - 1]
            mat.append(row)
        return TensorElement(self, mat)

    def gauss_sum(self, i: int) -> "TensorElement":
        """(alpha^i, x) = sum_j alpha^{ij} x^{g^j} over j = 0 .. p-2."""
        raw = self.zero_matrix()
        power = 1
        for j in range(self.p - 1):
            raw[(i * j) % self.lam][power] += 1
            power = power * self.g % self.p
        return self.reduce(raw)

    def __eq__(self, other):
        return (
            isinstance(other, GaussSumRing)
            and (self.lam, self.p) == (other.lam, other.p)
        )

    def __hash__(self):
        return hash(("GaussSumRing", self.lam, self.p))


class TensorElement:
    __slots__ = ("ring", "mat")

    def __init__(self, ring: GaussSumRing, mat: list[list[int]]):
        self.ring = ring
        self.mat = tuple(tuple(row) for row in mat)

    def __add__(self, other):
        assert self.ring == other.ring
        return TensorElement(
            self.ring,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.mat, other.mat)
            ],
        )

    def __mul__(self, other):
        assert self.ring == other.ring
        lam, p = self.ring.lam, self.ring.p
        raw = self.ring.zero_matrix()
        for a1, row1 in enumerate(self.mat):
            for b1, c1 in enumerate(row1):
                if not c1:
                    continue
                for a2, row2 in enumerate(other.mat):
                    for b2, c2 in enumerate(row2):
                        if c2:
                            raw[(a1 + a2) % lam][(b1 + b2) % p] += c1 * c2
        return self.ring.reduce(raw)

    def __pow__(self, e: int):
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        if result is None:
            raise ValueError("zeroth tensor power not needed")
        return result

    def scale_exact(self, num: int, den: int) -> "TensorElement":
        out = []
        for row in self.mat:
            new = []
            for c in row:
                val = c * num
                if val % den:
                    raise ArithmeticError("inexact division in tensor ring")
                new.append(val // den)
            out.append(new)
        return TensorElement(self.ring, out)

    def substitute_y(self, j: int) -> "TensorElement":
        """The ring map x -> x^j (j coprime to p) applied to the Y-part."""
        p = self.ring.p
        if j % p == 0:
            raise ValueError("substitution exponent must be a unit mod p")
        raw = self.ring.zero_matrix()
        for a, row in enumerate(self.mat):
            for b, c in enumerate(row):
                if c:
                    raw[a][(j * b) % p] += c
        return self.ring.reduce(raw)

    def y_free(self) -> bool:
        return all(not any(row[1:]) for row in self.mat)

    def x_part(self) -> CyclotomicElement:
        if not self.y_free():
            raise ValueError("element has a nontrivial Y-part")
        return self.ring.xring.element([row[0] for row in self.mat])

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.ring == other.ring
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.ring, self.mat))


def gauss_sum_ratio(G: GaussSumRing, i: int, k: int) -> CyclotomicElement:
    """(alpha^i, x)(alpha^k, x) / (alpha^{i+k}, x), divided out exactly.

    Division is by the inverse-sum trick: multiplying by (alpha^{-(i+k)}, x)
    turns the denominator into chi^{i+k}(-1) * p, which is then removed
    exactly.  The result is Y-free and equals jacobi_sum_positive.
    """
    lam = G.lam
    if i % lam == 0 or k % lam == 0 or (i + k) % lam == 0:
        raise ValueError("degenerate index for the Gauss-sum ratio")
    t = G.gauss_sum(i) * G.gauss_sum(k) * G.gauss_sum(-(i + k))
    value = t.scale_exact(1, G.p).x_part()
    # remove chi^{i+k}(-1) = zeta^{(i+k)(p-1)/2}
    exponent = (i + k) * ((G.p - 1) // 2) % lam
    correction = G.xring.alpha((-exponent) % lam)
    return value * correction


def gauss_power_descent(lam: int, p: int, i: int = 1) -> dict:
    """Compute (alpha^i, x)^lam, check it is Y-free and substitution
    invariant, and return it as an element of Z[alpha]."""
    if (p - 1) % lam != 0:
        raise ValueError(f"lam = {lam} must divide p - 1 = {p - 1}")
    if i % lam == 0:
        raise ValueError("index must be nonzero mod lam")
    G = GaussSumRing(lam, p)
    power = G.gauss_sum(i) ** lam
    for j in range(1, p):
        if power.substitute_y(j) != power:
            raise ArithmeticError(
                f"descent failed: (alpha^{i}, x)^{lam} is not invariant "
                f"under x -> x^{j}"
            )
    if not power.y_free():
        raise ArithmeticError("descent failed: result has a nontrivial Y-part")
    element = power.x_part()
    return {
        "p": p,
        "order": lam,
        "i": i,
        "element": list(element.coeffs),
        "substitution_invariant": True,
    }


def fundamental_congruence_check(p: int, i: int, k: int) -> dict:
    """Jacobi's congruence for the order p-1 sums in Z[zeta_{p-1}].

    The sum is formed by direct summation, the substitution sends the root
    of unity to the least primitive root g mod p, and the result must be
    0 mod p when i + k < p - 1 and the exact binomial quotient
    (2(p-1)-i-k)! / ((p-1-i)!(p-1-k)!) mod p when i + k > p - 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not (0 < i < p - 1 and 0 < k < p - 1):
        raise ValueError("indices must lie strictly between 0 and p-1")
    if i + k == p - 1:
        raise ValueError("excluded index: i + k = p - 1")
    chi = Character(p, p - 1)
    psi = jacobi_sum(chi, i, k)
    value = 0
    for e, c in enumerate(psi.coeffs):
        value = (value + c * pow(chi.g, e, p)) % p
    if i + k < p - 1:
        expected = 0
    else:
        u, v = p - 1 - i, p - 1 - k
        expected = comb(u + v, u) % p
    return {
        "p": p,
        "i": i,
        "k": k,
        "value": value,
        "expected": expected,
        "holds": value == expected,
        "branch": "zero" if i + k < p - 1 else "binomial",
    }


def fc_divisibility_criterion(lam: int, p: int, i: int, k: int) -> bool:
    """Whether the congruence predicts p | psi for order-lam indices.

    Scaling (i, k) by m = (p-1)/lam turns the order-lam sum into the
    order-(p-1) congruence with indices (im, km): divisibility happens
    exactly when im + km < p - 1.
    """
    m = (p - 1) // lam
    return (i % lam) * m + (k % lam) * m < p - 1


def quartic_decomposition(p: int) -> dict:
    """p = a^2 + b^2 via J(chi, chi) for the quartic character.

    The odd part a is pinned mod p, up to sign, by half the central
    binomial coefficient.
    """
    if p % 4 != 1:
        raise ValueError(f"{p} must be 1 mod 4")
    chi = Character(p, 4)
    j = jacobi_sum(chi, 1, 1)
    a_raw, b_raw = j.coeffs
    if a_raw * a_raw + b_raw * b_raw != p:
        raise ArithmeticError("quartic Jacobi sum does not have modulus sqrt(p)")
    m = (p - 1) // 4
    a = a_raw if a_raw % 2 else b_raw
    half_binomial = comb(2 * m, m) // 2
    matches = (a - half_binomial) % p == 0 or (a + half_binomial) % p == 0
    return {
        "p": p,
        "m": m,
        "J": list(j.coeffs),
        "psi": list((-j).coeffs),
        "a": a,
        "b": b_raw if a_raw % 2 else a_raw,
        "half_binomial": half_binomial,
        "congruence_holds": matches,
    }


def _integer_sqrt(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None


def binomial_congruence(p: int) -> dict:
    """Gauss: for p = a^2 + 4b^2 = 4n + 1, 2a = +-C(2n, n) mod p."""
    if p % 4 != 1:
        raise ValueError(f"{p} must be 1 mod 4")
    n = (p - 1) // 4
    pair = None
    a = 1
    while a * a < p:
        rest = p - a * a
        if rest % 4 == 0:
            b = _integer_sqrt(rest // 4)
            if b is not None:
                pair = (a, b)
                break
        a += 2
    if pair is None:
        raise ArithmeticError(f"{p} has no representation a^2 + 4b^2")
    a, b = pair
    central = comb(2 * n, n)
    holds = (2 * a - central) % p == 0 or (2 * a + central) % p == 0
    return {
        "p": p,
        "n": n,
        "a": a,
        "b": b,
        "central_binomial": central,
        "congruence_holds": holds,
    }


def stickelberger_check(lam: int, p: int, uniformizer_bound: int = 6) -> dict:
    """The prime-ideal support of J(chi, chi) for chi of odd prime order lam.

    With the prime above p normalized by xi = g^m (so that the residue
    symbol of g is zeta), the valuation of J(chi, chi) must be exactly 1 at
    the conjugate primes indexed by 0 < 2t < lam and 0 elsewhere; both the
    uniformizer multiplicity and the lattice oracle are consulted.
    """
    from kummerlab.valuation import kummer_prime, multiplicity, valuation_oracle

    if not is_prime(lam) or lam == 2:
        raise ValueError("order must be an odd prime")
    if p % lam != 1:
        raise ValueError(f"p = {p} must be 1 mod {lam}")
    chi = Character(p, lam)
    j = jacobi_sum(chi, 1, 1)
    maps = enumerate_jacobi_maps(lam, p)
    entries = []
    ok = True
    for t in range(1, lam):
        xi = pow(chi.g, chi.m * t, p)
        phi = map_for_root(maps, xi)
        K = kummer_prime(phi, uniformizer_bound)
        v_kummer = multiplicity(j, K)
        v_lattice = valuation_oracle(j, phi)
        expected = 1 if 2 * t < lam else 0
        ok = ok and v_kummer == expected and v_lattice == expected
        entries.append(
            {
                "t": t,
                "xi": xi,
                "valuation": v_kummer,
                "valuation_oracle": v_lattice,
                "expected": expected,
            }
        )
    total = sum(e["valuation"] for e in entries)
    return {
        "p": p,
        "order": lam,
        "J": list(j.coeffs),
        "psi": list((-j).coeffs),
        "norm": norm(j),
        "entries": entries,
        "total_valuation": total,
        "holds": ok and total == (lam - 1) // 2,
    }
