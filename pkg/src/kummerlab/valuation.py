"""Discrete valuations on Z[alpha] built from uniformizers.

A KummerPrime packages a Jacobi map with a uniformizer psi found among
integer combinations of Gaussian periods: psi is killed by the map and its
period-field norm psi * Psi (with Psi the product of the remaining period
conjugates) is divisible by q exactly once.  The multiplicity of the ideal
prime in an element x is then the largest mu such that every coefficient of
x * Psi^mu is divisible by q^mu.

An independent oracle computes the same number as the largest mu with
x in (ker phi)^mu, using iterated lattice products and no uniformizer at
all.  The two routes are compared wholesale in the test suite; divisibility
and definedness are likewise implemented twice (valuations vs. colon
lattices / exact division).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from kummerlab.arith import (
    DEFAULT_TRIAL_DIVISION_BOUND,
    factorize_int,
    valuation_int,
)
from kummerlab.cyclotomic import (
    CyclotomicElement,
    PeriodSystem,
    conjugate,
    gaussian_periods,
    norm,
)
from kummerlab.idealprimes import JacobiMap, enumerate_jacobi_maps
from kummerlab.lattice import principal_lattice

DEFAULT_UNIFORMIZER_BOUND = 3
MAX_UNIFORMIZER_BOUND = 6

# Hard cap on candidates examined per search.  Every map the acceptance
# grid certifies through a uniformizer finds one within a few hundred
# candidates; the cap only cuts off searches that are hopeless because the
# prime is too large for any bounded period combination.
SEARCH_CANDIDATE_BUDGET = 200_000

# Above this prime, factorize/divides go straight to the lattice oracle:
# the smallest period uniformizer has coefficients of size about p^(1/e),
# so bounded searches are pointless there.
KUMMER_SEARCH_PRIME_LIMIT = 200


class UniformizerSearchError(RuntimeError):
    """No uniformizer within the search limits; the limits are echoed."""

    def __init__(self, phi: JacobiMap, bound: int, examined: int):
        self.bound = bound
        self.examined = examined
        super().__init__(
            f"uniformizer search for {phi!r} exhausted coefficient bound "
            f"{bound} after {examined} candidates; raise the bound to continue"
        )


@dataclass(frozen=True)
class KummerPrime:
    """An ideal prime with a certified uniformizer."""

    map: JacobiMap
    periods: PeriodSystem
    psi: CyclotomicElement
    psi_conjugates: CyclotomicElement  # Psi = product of the other conjugates
    period_norm: int  # psi * Psi as a rational integer

    @property
    def q(self) -> int:
        return self.map.p

    def certificate(self) -> dict:
        q = self.q
        return {
            "norm": self.period_norm,
            "divisible_once": self.period_norm % q == 0
            and (self.period_norm // q) % q != 0,
        }


def _period_conjugate_product(
    psi: CyclotomicElement, system: PeriodSystem
) -> CyclotomicElement:
    """Psi: the product of sigma_g^j(psi) over j = 1 .. e-1."""
    out = system.ring.one()
    current = psi
    for _ in range(system.e - 1):
        current = conjugate(current, system.g)
        out = out * current
    return out


def _candidate_vectors(num_coords: int, bound: int):
    """(c, c_0, ..., c_{e-1}) by increasing max-norm, then lexicographically."""
    for m in range(1, bound + 1):
        for vec in iter_product(range(-m, m + 1), repeat=num_coords):
            if max(abs(v) for v in vec) == m:
                yield vec


def find_uniformizer(
    phi: JacobiMap,
    system: PeriodSystem | None = None,
    bound: int = DEFAULT_UNIFORMIZER_BOUND,
    max_bound: int | None = None,
) -> KummerPrime:
    """Search period combinations for a uniformizer of the map's ideal prime.

    Candidates psi = c + sum c_i eta_i are enumerated by increasing max-norm
    and accepted when phi(psi) = 0 and q divides psi * Psi exactly once.
    The bound auto-escalates up to ``max_bound`` before failing.  For inert
    primes (e = 1) the rational prime q itself is the canonical uniformizer
    and is returned directly: the period ring is Z there, and no combination
    bounded independently of q could reach it.
    """
    q = phi.p
    if max_bound is None:
        max_bound = max(2 * bound, MAX_UNIFORMIZER_BOUND)
    if system is None:
        system = gaussian_periods(phi.lam, (phi.lam - 1) // phi.f)
    if system.e * phi.f != phi.lam - 1:
        raise ValueError("period system does not match the map's residue degree")
    ring = system.ring
    e = system.e
    if e == 1:
        psi = ring.element(q)
        return KummerPrime(phi, system, psi, ring.one(), q)
    residues = phi.period_residues(system)
    # The u-vectors of the e conjugate primes of q in the period field are
    # the e rotations of this map's u-vector, so for unramified q a
    # candidate is worth an exact norm evaluation only when rotation 0 is
    # its unique zero: a second zero rotation already forces q^2 | norm.
    rotations = [tuple(residues[(i + l) % e] for i in range(e)) for l in range(e)]
    ramified = q == phi.lam
    current_bound = max(1, bound)
    examined = 0
    while True:
        for vec in _candidate_vectors(e + 1, current_bound):
            examined += 1
            if examined > SEARCH_CANDIDATE_BUDGET:
                raise UniformizerSearchError(phi, current_bound, examined)
            c, coeffs = vec[0], vec[1:]
            if ramified:
                if (c + sum(ci * ui for ci, ui in zip(coeffs, residues))) % q:
                    continue
            else:
                zeros = [
                    l
                    for l, rot in enumerate(rotations)
                    if (c + sum(ci * ui for ci, ui in zip(coeffs, rot))) % q == 0
                ]
                if zeros != [0]:
                    continue
            psi = system.combine(c, coeffs)
            if psi.is_zero():
                continue
            big_psi = _period_conjugate_product(psi, system)
            nval = (psi * big_psi).rational_value()
            if nval % q == 0 and (nval // q) % q != 0:
                return KummerPrime(phi, system, psi, big_psi, nval)
        if current_bound >= max_bound:
            raise UniformizerSearchError(phi, current_bound, examined)
        current_bound = min(2 * current_bound, max_bound)


@lru_cache(maxsize=None)
def kummer_prime(phi: JacobiMap, max_bound: int = MAX_UNIFORMIZER_BOUND) -> KummerPrime:
    """Cached uniformizer for a map, with the default search bounds."""
    return find_uniformizer(phi, max_bound=max_bound)


def divisibility_step(x: CyclotomicElement, K: KummerPrime, mu: int) -> bool:
    """Kummer's test at level mu: q^mu divides every coefficient of x*Psi^mu."""
    return (x * K.psi_conjugates**mu).content_divisible_by(K.q**mu)


def multiplicity(x: CyclotomicElement, K: KummerPrime) -> int:
    """Largest mu with x * Psi^mu divisible by q^mu coefficientwise."""
    if x.is_zero():
        raise ValueError("valuation of 0 is infinite")
    q = K.q
    cap = (x.ring.degree) * valuation_int(norm(x), q) + 1
    w = x
    mu = 0
    qpow = q
    while True:
        w = w * K.psi_conjugates
        if not w.content_divisible_by(qpow):
            return mu
        mu += 1
        qpow *= q
        if mu > cap:
            raise AssertionError("multiplicity exceeded its norm bound")


_KERNEL_POWERS: dict[tuple[int, int, tuple[int, ...]], list] = {}


def _kernel_power(phi: JacobiMap, mu: int):
    key = (phi.lam, phi.p, phi.factor)
    powers = _KERNEL_POWERS.setdefault(key, [phi.kernel()])
    table = phi.ring.mult_table()
    while len(powers) < mu:
        powers.append(powers[-1].product(powers[0], table))
    return powers[mu - 1]


def valuation_oracle(x: CyclotomicElement, phi: JacobiMap) -> int:
    """Largest mu with x in (ker phi)^mu; independent of any uniformizer."""
    if x.is_zero():
        raise ValueError("valuation of 0 is infinite")
    cap = (x.ring.degree) * valuation_int(norm(x), phi.p) + 1
    mu = 0
    coords = list(x.coeffs)
    while coords in _kernel_power(phi, mu + 1):
        mu += 1
        if mu > cap:
            raise AssertionError("oracle valuation exceeded its norm bound")
    return mu


def is_defined_at(
    numerator: CyclotomicElement, denominator: CyclotomicElement, phi: JacobiMap
) -> bool:
    """Whether the map extends to numerator/denominator (colon-lattice test).

    phi is defined at the fraction iff the colon ideal
    {delta : numerator * delta in denominator * O} is not contained in
    ker phi.
    """
    if denominator.is_zero():
        raise ZeroDivisionError("zero denominator")
    table = phi.ring.mult_table()
    den_lattice = principal_lattice(list(denominator.coeffs), table)
    col = den_lattice.colon(list(numerator.coeffs), table)
    return not phi.kernel().contains_lattice(col)


def is_defined_at_by_valuation(
    numerator: CyclotomicElement, denominator: CyclotomicElement, K: KummerPrime
) -> bool:
    """Valuation form of the same test: v(numerator) >= v(denominator)."""
    if denominator.is_zero():
        raise ZeroDivisionError("zero denominator")
    if numerator.is_zero():
        return True
    return multiplicity(numerator, K) >= multiplicity(denominator, K)


@dataclass(frozen=True)
class ValuationRecord:
    map: JacobiMap
    element: CyclotomicElement
    mu: int
    kummer: KummerPrime | None  # None when the oracle certified mu instead


@dataclass(frozen=True)
class IdealFactorization:
    """Multiplicities of x at every map of every prime dividing norm(x).

    The element is determined by its records only up to a unit multiple;
    norm consistency (sum of f * mu over the maps of p equals the exponent
    of p in norm(x)) is validated at construction time.
    """

    element: CyclotomicElement
    norm_value: int
    records: tuple[ValuationRecord, ...]

    def nonzero(self) -> tuple[ValuationRecord, ...]:
        return tuple(r for r in self.records if r.mu > 0)


@lru_cache(maxsize=None)
def _kummer_or_none(phi: JacobiMap, max_bound: int) -> KummerPrime | None:
    """Cached uniformizer search that also caches failures."""
    try:
        return find_uniformizer(phi, max_bound=max_bound)
    except UniformizerSearchError:
        return None


def _valuation_with_fallback(
    x: CyclotomicElement, phi: JacobiMap, uniformizer_bound: int
) -> tuple[int, KummerPrime | None]:
    """Kummer multiplicity when a bounded uniformizer exists, else oracle.

    For a split prime p the smallest period uniformizer has coefficients on
    the order of p^(1/e), so a fixed bound cannot serve arbitrarily large
    norms; the lattice oracle computes the same valuation (their agreement
    is a tested theorem) without any search.
    """
    if phi.p > KUMMER_SEARCH_PRIME_LIMIT:
        return valuation_oracle(x, phi), None
    K = _kummer_or_none(phi, uniformizer_bound)
    if K is None:
        return valuation_oracle(x, phi), None
    return multiplicity(x, K), K


def factorize(
    x: CyclotomicElement,
    trial_bound: int = DEFAULT_TRIAL_DIVISION_BOUND,
    uniformizer_bound: int = MAX_UNIFORMIZER_BOUND,
) -> IdealFactorization:
    """Complete ideal prime factorization of a nonzero element."""
    if x.is_zero():
        raise ValueError("cannot factor 0")
    nval = norm(x)
    records = []
    for p in sorted(factorize_int(nval, trial_bound)):
        total = 0
        for phi in enumerate_jacobi_maps(x.ring.n, p):
            mu, K = _valuation_with_fallback(x, phi, uniformizer_bound)
            total += phi.f * mu
            records.append(ValuationRecord(phi, x, mu, K))
        if total != valuation_int(nval, p):
            raise ArithmeticError(
                f"norm consistency failed at p={p}: sum f*mu = {total}, "
                f"v_p(norm) = {valuation_int(nval, p)}"
            )
    return IdealFactorization(x, nval, tuple(records))


def exact_quotient(
    d: CyclotomicElement, x: CyclotomicElement
) -> CyclotomicElement | None:
    """x / d when the quotient lies in Z[alpha], else None.

    Multiplies x by the product of the nontrivial conjugates of d and
    divides coefficientwise by norm(d).
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero element")
    lam = d.ring.n
    cofactor = d.ring.one()
    for k in range(2, lam):
        cofactor = cofactor * conjugate(d, k)
    y = x * cofactor
    q = norm(d)
    if q == 0:
        raise ZeroDivisionError("division by zero element")
    if not y.content_divisible_by(abs(q)):
        return None
    return d.ring.element([c // q for c in y.coeffs])


def divides(
    d: CyclotomicElement,
    x: CyclotomicElement,
    trial_bound: int = DEFAULT_TRIAL_DIVISION_BOUND,
) -> bool:
    """Whether d divides x in Z[alpha]; both routes must agree.

    Route one is exact division; route two compares valuations at every map
    over every prime dividing norm(d).
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero element")
    by_division = exact_quotient(d, x) is not None
    if x.is_zero():
        return True
    by_valuation = True
    for p in sorted(factorize_int(norm(d), trial_bound)):
        for phi in enumerate_jacobi_maps(d.ring.n, p):
            v_d, K = _valuation_with_fallback(d, phi, MAX_UNIFORMIZER_BOUND)
            v_x = multiplicity(x, K) if K is not None else valuation_oracle(x, phi)
            if v_d > v_x:
                by_valuation = False
    if by_division != by_valuation:
        raise ArithmeticError(
            "exact division and valuation comparison disagree on divisibility"
        )
    return by_division
