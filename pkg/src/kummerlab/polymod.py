"""Polynomials over F_p and their complete factorization.

Representation matches polyint: dense coefficient lists, lowest degree
first, all coefficients reduced into [0, p), zero polynomial is [].

Factorization is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting.  The equal-degree stage draws its splitting
elements from a fixed counter sequence instead of a random source, so the
factor list (and everything downstream that is ordered by it) is
reproducible bit for bit.
"""

from kummerlab.arith import is_prime


def gf_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def gf_normalize(c: list[int], p: int) -> list[int]:
    return gf_trim([x % p for x in c])


def gf_add(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return gf_trim(out)


def gf_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return gf_trim(out)


def gf_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return gf_trim(out)


def gf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv_lead % p
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[i + k] = (r[i + k] - c * b) % p
        gf_trim(r)
    return gf_trim(q), r


def gf_mod(f: list[int], g: list[int], p: int) -> list[int]:
    return gf_divmod(f, g, p)[1]


def gf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    while g:
        f, g = g, gf_mod(f, g, p)
    return gf_monic(f, p)


def gf_monic(f: list[int], p: int) -> list[int]:
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gf_pow_mod(f: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    base = gf_mod(f, mod, p)
    while e:
        if e & 1:
            out = gf_mod(gf_mul(out, base, p), mod, p)
        base = gf_mod(gf_mul(base, base, p), mod, p)
        e >>= 1
    return out


def gf_deriv(f: list[int], p: int) -> list[int]:
    return gf_trim([i * c % p for i, c in enumerate(f)][1:])


def _counter_poly(counter: int, p: int) -> list[int]:
    """The counter-th polynomial over F_p (base-p digits as coefficients)."""
    c = []
    while counter:
        counter, d = divmod(counter, p)
        c.append(d)
    return c


def _squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition: list of (squarefree factor, multiplicity)."""
    out: list[tuple[list[int], int]] = []

    def recurse(g: list[int], mult: int) -> None:
        d = gf_deriv(g, p)
        if not d:
            # g = h(X^p) = h(X)^p since coefficients lie in the prime field
            h = [g[i] for i in range(0, len(g), p)]
            recurse(h, mult * p)
            return
        c = gf_gcd(g, d, p)
        w, _ = gf_divmod(g, c, p)  # product of squarefree part
        i = 1
        while len(w) > 1:
            y = gf_gcd(w, c, p)
            piece, _ = gf_divmod(w, y, p)
            if len(piece) > 1:
                out.append((piece, mult * i))
            w = y
            c, _ = gf_divmod(c, y, p)
            i += 1
        if len(c) > 1:
            recurse(c, mult)

    recurse(gf_monic(f, p), 1)
    return out


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Split a squarefree monic f into (product of degree-d irreducibles, d)."""
    out = []
    x = [0, 1]
    h = x
    rem = f
    d = 0
    while len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, rem, p)
        g = gf_gcd(gf_sub(h, x, p), rem, p)
        if len(g) > 1:
            out.append((g, d))
            rem, _ = gf_divmod(rem, g, p)
            h = gf_mod(h, rem, p)
    if len(rem) > 1:
        out.append((rem, len(rem) - 1))
    return out


def _equal_degree_split(f: list[int], d: int, p: int) -> list[list[int]]:
    """Split a monic squarefree product of degree-d irreducibles completely.

    Splitting elements come from the deterministic counter sequence; for odd
    p the usual (p^d - 1)/2 power map is used, for p = 2 the trace map over
    F_{2^d}.
    """
    if len(f) - 1 == d:
        return [gf_monic(f, p)]
    counter = p  # first non-constant polynomial
    while True:
        h = _counter_poly(counter, p)
        counter += 1
        if len(h) < 2:
            continue
        h = gf_mod(h, f, p)
        if len(h) < 2:
            continue
        if p == 2:
            t = h
            acc = h
            for _ in range(d - 1):
                t = gf_mod(gf_mul(t, t, p), f, p)
                acc = gf_add(acc, t, p)
            g = gf_gcd(acc, f, p)
        else:
            t = gf_pow_mod(h, (p**d - 1) // 2, f, p)
            g = gf_gcd(gf_sub(t, [1], p), f, p)
        if 0 < len(g) - 1 < len(f) - 1:
            rest, _ = gf_divmod(f, g, p)
            return _equal_degree_split(g, d, p) + _equal_degree_split(rest, d, p)


def factor_mod_p(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Complete factorization of f over F_p into monic irreducibles.

    Returns [(factor, multiplicity), ...] sorted by (degree, coefficient
    tuple); the product of factor**multiplicity times the leading
    coefficient of f reconstructs f.  p must be prime and f nonzero.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    f = gf_normalize(list(f), p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if len(f) == 1:
        return []
    out: list[tuple[list[int], int]] = []
    for sqf, mult in _squarefree_parts(f, p):
        for prod, d in _distinct_degree(sqf, p):
            for irr in _equal_degree_split(prod, d, p):
                out.append((irr, mult))
    out.sort(key=lambda fm: (len(fm[0]), tuple(fm[0])))
    return out
