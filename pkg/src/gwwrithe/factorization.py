"""Factorization utilities: rational polynomial factorization by squarefree
decomposition + Zassenhaus, integer factorization for square classes, and
k-th power class tests.

The polynomial routines are tuned for the small degrees (<= 16 or so) that
come out of secant elimination; nothing here tries to be asymptotically
clever.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .polynomials import UniPoly, poly_gcd

# ---------------------------------------------------------------------------
# integers

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]

TRIAL_DIVISION_BOUND = 10 ** 6


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    # Brent's variant; n odd composite with no small factors
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent} (|n| <= 1 -> {})."""
    n = abs(n)
    if n <= 1:
        return {}
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    bound = min(TRIAL_DIVISION_BOUND, math.isqrt(n))
    while d <= bound and n > 1:
        if n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
            bound = min(TRIAL_DIVISION_BOUND, math.isqrt(n))
        else:
            d += 2
    if n > 1:
        if d > math.isqrt(n):
            out[n] = out.get(n, 0) + 1
        else:
            rng = random.Random(n)
            stack = [n]
            while stack:
                m = stack.pop()
                if m == 1:
                    continue
                if is_probable_prime(m):
                    out[m] = out.get(m, 0) + 1
                    continue
                g = _pollard_rho(m, rng)
                stack.append(g)
                stack.append(m // g)
    return out


def squarefree_part(q) -> int:
    """Signed squarefree integer representing the square class of q != 0."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("square class of zero is undefined")
    n = q.numerator * q.denominator
    out = -1 if n < 0 else 1
    for p, e in factor_int(n).items():
        if e % 2:
            out *= p
    return out


def is_square(q) -> bool:
    q = Fraction(q)
    return q > 0 and squarefree_part(q) == 1 if q != 0 else True


def integer_kth_root(n: int, k: int):
    """Exact k-th root of n >= 0, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return n
    lo, hi = 1, 1
    while hi ** k < n:
        hi *= 2
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid ** k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def is_kth_power_class(a, b, k: int) -> bool:
    """True iff a/b is a k-th power in Q*."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("k-th power class needs nonzero inputs")
    if k <= 0:
        raise ValueError("k must be positive")
    ratio = a / b
    if ratio < 0 and k % 2 == 0:
        return False
    num, den = abs(ratio.numerator), ratio.denominator
    return integer_kth_root(num, k) is not None and integer_kth_root(den, k) is not None


# ---------------------------------------------------------------------------
# GF(p)[x] arithmetic: dense int lists, lowest degree first

def _gf_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gf_trim(out)


def _gf_divmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    if dg < 0:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - dg - 1, -1, -1):
        c = f[k + dg] * inv % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] = (f[k + j] - c * b) % p
    return _gf_trim(q), _gf_trim(f[:dg] if dg else [])


def _gf_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _gf_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _gf_divmod(f, g, p)[1]
    return _gf_monic(f, p)


def _gf_gcdex(f, g, p):
    """(d, s, t) with s*f + t*g = d = monic gcd over GF(p)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _gf_trim([(x - y) % p for x, y in zip(a, b)])


def _gf_powmod(f, e, mod, p):
    result = [1]
    base = _gf_divmod(f, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_distinct_degree(f, p):
    """[(d, product of the irreducible degree-d factors)] of squarefree monic f."""
    out = []
    g = list(f)
    h = [0, 1]  # x
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_powmod(h, p, g, p)
        factor = _gf_gcd(_gf_sub(h, [0, 1], p), g, p)
        if len(factor) > 1:
            out.append((d, factor))
            g = _gf_divmod(g, factor, p)[0]
            h = _gf_divmod(h, g, p)[1]
    if len(g) > 1:
        out.append((len(g) - 1, g))
    return out


def _gf_equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f whose factors all have
    degree d; requires p odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _gf_trim([rng.randrange(p) for _ in range(n)])
        if len(a) <= 1:
            continue
        g = _gf_gcd(a, f, p)
        if 1 < len(g) < len(f):
            break
        b = _gf_powmod(a, (p ** d - 1) // 2, f, p)
        b = list(b) or [0]
        b = _gf_sub(b, [1], p)
        g = _gf_gcd(b, f, p)
        if 1 < len(g) < len(f):
            break
    rest = _gf_divmod(f, g, p)[0]
    return _gf_equal_degree(g, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


def _gf_factor_squarefree(f, p, rng):
    out = []
    for d, g in _gf_distinct_degree(f, p):
        out.extend(_gf_equal_degree(g, d, p, rng))
    return out


# ---------------------------------------------------------------------------
# Z[x] helpers

def _z_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    while out and out[-1] == 0:
        out.pop()
    return out


def _centered(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _primitive_part(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return f
    g = 0
    for c in f:
        g = math.gcd(g, c)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _z_exact_div(f, g):
    f = list(f)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        c = f[k + dg]
        if c % g[-1]:
            raise ValueError("not divisible")
        c //= g[-1]
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    if any(f[:dg]):
        raise ValueError("not divisible")
    return q


def _z_divides(g, f):
    if not g or len(g) > len(f):
        return False
    try:
        _z_exact_div(f, g)
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# multifactor linear Hensel lifting

def _hensel_lift(f, factors, p, target):
    """Lift the monic pairwise-coprime factorization f = lc * prod(factors)
    (mod p) to a modulus >= target.  Returns (lifted factors, modulus)."""
    lc = f[-1]
    # Bezout data mod p: U_i = (prod_{j != i} g_j)^(-1) mod (g_i, p)
    inverses = []
    for i, g in enumerate(factors):
        d = [lc % p]
        for j, h in enumerate(factors):
            if i != j:
                d = _gf_mul(d, h, p)
        d = _gf_divmod(d, g, p)[1]
        one, s, _ = _gf_gcdex(d, g, p)
        assert one == [1]
        inverses.append(s)
    gs = [[c % p for c in g] for g in factors]
    m = p
    while m < target:
        prod = [lc]
        for g in gs:
            prod = _z_mul(prod, g)
        diff = list(f)
        n = max(len(diff), len(prod))
        diff += [0] * (n - len(diff))
        prod += [0] * (n - len(prod))
        e = [(a - b) // m % p for a, b in zip(diff, prod)]
        e = _gf_trim(e)
        for i, g in enumerate(gs):
            delta = _gf_divmod(_gf_mul(e, inverses[i], p), g, p)[1]
            for k, c in enumerate(delta):
                g[k] = g[k] + m * c
        m *= p
    return gs, m


def _zassenhaus(f_int, rng):
    """Irreducible factors in Z[x] of a primitive squarefree integer
    polynomial with positive leading coefficient and degree >= 1."""
    n = len(f_int) - 1
    if n == 1:
        return [f_int]
    lc = f_int[-1]
    p = 3
    while True:
        if lc % p:
            fp = _gf_trim([c % p for c in f_int])
            dfp = _gf_trim([i * c % p for i, c in enumerate(fp)][1:])
            if len(fp) - 1 == n and dfp and len(_gf_gcd(fp, dfp, p)) == 1:
                break
        p = _next_prime(p)
    modular = _gf_factor_squarefree(_gf_monic(fp, p), p, rng)
    if len(modular) == 1:
        return [f_int]
    norm = math.isqrt(sum(c * c for c in f_int)) + 1
    bound = 2 ** (n + 1) * norm * abs(lc)
    lifted, modulus = _hensel_lift(f_int, modular, p, 2 * bound + 1)

    factors = []
    remaining = list(range(len(lifted)))
    f_cur = list(f_int)
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found and 2 * size <= len(remaining):
            found = False
            for subset in itertools.combinations(remaining, size):
                cand = [f_cur[-1] % modulus]
                for i in subset:
                    cand = [c % modulus for c in _z_mul(cand, lifted[i])]
                cand = _primitive_part([_centered(c, modulus) for c in cand])
                if cand and _z_divides(cand, f_cur):
                    factors.append(cand)
                    f_cur = _z_exact_div(f_cur, cand)
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
        size += 1
    if len(f_cur) > 1:
        factors.append(_primitive_part(f_cur))
    return factors


def _next_prime(p):
    p += 2
    while not is_probable_prime(p):
        p += 2
    return p


def _squarefree_decomposition(f: UniPoly):
    """Yun's algorithm on monic f: [(squarefree part, multiplicity)]."""
    out = []
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f // a
    c = (d // a) - b.derivative()
    i = 1
    while b.degree > 0:
        step = poly_gcd(b, c)
        if step.degree > 0:
            out.append((step.monic(), i))
        b = b // step
        c = (c // step) - b.derivative()
        i += 1
    return out


def factor_rational(f: UniPoly):
    """Factor f over Q: list of (monic irreducible, multiplicity) sorted by
    (degree, coefficients); f = lc(f) * prod factor^mult exactly.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    rng = random.Random(hash(f.coeffs) & 0xFFFFFFFF)
    out = []
    for part, mult in _squarefree_decomposition(f.monic()):
        den = 1
        for c in part.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = _primitive_part([int(c * den) for c in part.coeffs])
        for g in _zassenhaus(ints, rng):
            out.append((UniPoly([Fraction(c, g[-1]) for c in g]), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible(f: UniPoly) -> bool:
    if f.degree <= 0:
        return False
    facs = factor_rational(f)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == f.degree
