"""Symmetric bilinear forms over Q and their Grothendieck-Witt classes.

A GW class is stored as a multiset of nonzero diagonal entries; equality of
classes is isometry over Q, decided by Hasse-Minkowski through the complete
invariant set (rank, signature, discriminant square class, Hasse symbols).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .factorization import factor_int, squarefree_part
from .numberfields import NFElem, NumberField, nf_trace
from .polynomials import UniPoly

INF = "inf"  # the real place


class SingularForm(ValueError):
    """A nondegenerate form was required but det = 0."""


class SymBilForm:
    """Symmetric matrix over Q with exact entries."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SymBilForm is immutable")

    def __eq__(self, other):
        if not isinstance(other, SymBilForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self) -> Fraction:
        return linalg.det(self.entries)

    def __repr__(self):
        return f"SymBilForm({[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class GWInvariants:
    rank: int
    signature: int
    disc: Fraction  # squarefree integer representative, as a Fraction
    hasse: dict  # prime (int or INF) -> +-1 on the stated support

    def support(self):
        return set(self.hasse)


class GWClass:
    """Grothendieck-Witt class <a_1> + ... + <a_r> over Q.

    Equality is isometry of the underlying forms, not multiset equality of
    the stored diagonal.
    """

    __slots__ = ("diag", "_invariants")

    def __init__(self, diag):
        entries = tuple(Fraction(a) for a in diag)
        if any(a == 0 for a in entries):
            raise ValueError("GW class entries must be nonzero")
        object.__setattr__(self, "diag", entries)
        object.__setattr__(self, "_invariants", None)

    def __setattr__(self, name, value):
        raise AttributeError("GWClass is immutable")

    @property
    def rank(self) -> int:
        return len(self.diag)

    def __add__(self, other):
        if not isinstance(other, GWClass):
            return NotImplemented
        return GWClass(self.diag + other.diag)

    def __rmul__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return GWClass(self.diag * k)

    def invariants(self) -> GWInvariants:
        inv = self._invariants
        if inv is None:
            inv = gw_invariants(self)
            object.__setattr__(self, "_invariants", inv)
        return inv

    def __eq__(self, other):
        if not isinstance(other, GWClass):
            return NotImplemented
        return gw_equal(self, other)

    def __hash__(self):
        inv = self.invariants()
        trimmed = frozenset((p, v) for p, v in inv.hasse.items() if v != 1)
        return hash((inv.rank, inv.signature, inv.disc, trimmed))

    def __repr__(self):
        return "GWClass(" + " + ".join(f"<{a}>" for a in self.diag) + ")" if self.diag else "GWClass(0)"


def diagonalize(m: SymBilForm):
    """Congruence diagonalization: (diagonal entries, transform) with
    transform^T * M * transform diagonal.  Works for singular input; zero
    diagonal entries mark the radical."""
    n = m.dim
    a = [list(row) for row in m.entries]
    p = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def col_op(dst, src, f):
        # column_dst += f * column_src, same on the transform
        for i in range(n):
            a[i][dst] += f * a[i][src]
            p[i][dst] += f * p[i][src]

    def row_op(dst, src, f):
        for j in range(n):
            a[dst][j] += f * a[src][j]

    def swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
            p[r][i], p[r][j] = p[r][j], p[r][i]
        a[i], a[j] = a[j], a[i]

    for k in range(n):
        if a[k][k] == 0:
            idx = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if idx is not None:
                swap(k, idx)
            else:
                idx = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if idx is None:
                    continue  # row/column k lies in the radical
                # char 0: adding the column with a nonzero off-diagonal entry
                # makes the diagonal entry 2*a[k][idx] != 0
                col_op(k, idx, Fraction(1))
                row_op(k, idx, Fraction(1))
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[k][i]:
                f = -a[k][i] / pivot
                col_op(i, k, f)
                row_op(i, k, f)
    diag = [a[i][i] for i in range(n)]
    return diag, tuple(tuple(row) for row in p)


def gw_from_matrix(m: SymBilForm) -> GWClass:
    """GW class of a nondegenerate symmetric matrix."""
    diag, _ = diagonalize(m)
    if any(d == 0 for d in diag):
        raise SingularForm("matrix is singular")
    return GWClass(diag)


def _padic_split(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a, b, p) -> int:
    """Hilbert symbol (a, b)_p over Q_p (p = INF for the real place)."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p == INF:
        return -1 if a < 0 and b < 0 else 1
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"not a place: {p!r}")
    # reduce to square-class integer representatives
    na = a.numerator * a.denominator
    nb = b.numerator * b.denominator
    alpha, u = _padic_split(abs(na), p)
    beta, v = _padic_split(abs(nb), p)
    u = u if na > 0 else -u
    v = v if nb > 0 else -v
    if p == 2:
        eps_u, eps_v = (u - 1) // 2, (v - 1) // 2
        omega_u, omega_v = (u * u - 1) // 8, (v * v - 1) // 8
        e = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if e % 2 else 1
    eps_p = (p - 1) // 2
    result = 1
    if (alpha * beta * eps_p) % 2:
        result = -result
    if beta % 2 and _legendre(u, p) == -1:
        result = -result
    if alpha % 2 and _legendre(v, p) == -1:
        result = -result
    return result


def _prime_support(entries):
    primes = {2}
    for a in entries:
        sf = squarefree_part(a)
        primes.update(factor_int(sf))
    return primes


def gw_invariants(c: GWClass) -> GWInvariants:
    """Rank, signature, discriminant square class and Hasse symbols of the
    diagonal form; the Hasse support is {2, INF} plus the primes dividing the
    entries' squarefree parts (everywhere else the symbol is +1)."""
    entries = c.diag
    rank = len(entries)
    signature = sum(1 if a > 0 else -1 for a in entries)
    disc = Fraction(squarefree_part(Fraction(1) if not entries else _product(entries)))
    support = sorted(_prime_support(entries)) + [INF] if entries else [2, INF]
    hasse = {}
    for p in (support if entries else [2, INF]):
        h = 1
        for i in range(rank):
            for j in range(i + 1, rank):
                h *= hilbert_symbol(entries[i], entries[j], p)
        hasse[p] = h
    return GWInvariants(rank=rank, signature=signature, disc=disc, hasse=hasse)


def _product(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def gw_equal(c1: GWClass, c2: GWClass) -> bool:
    """Isometry over Q by Hasse-Minkowski."""
    i1, i2 = c1.invariants(), c2.invariants()
    if i1.rank != i2.rank or i1.signature != i2.signature or i1.disc != i2.disc:
        return False
    for p in set(i1.hasse) | set(i2.hasse):
        if i1.hasse.get(p, 1) != i2.hasse.get(p, 1):
            return False
    return True


def trace_form(field: NumberField, a: NFElem) -> GWClass:
    """Class of the scaled trace form (x, y) -> Tr_{F/Q}(a x y) on the power basis."""
    a = field(a)
    if a.is_zero():
        raise ValueError("scaling element must be nonzero")
    d = field.degree
    traces = field.power_traces()
    # rows of a*z^(i+j) have coordinates (a * z^k); trace is linear
    powers = [field(1)]
    for _ in range(2 * d - 2):
        powers.append(powers[-1] * field.gen)
    scaled = [a * zk for zk in powers]
    tr = [sum((c * traces[k] for k, c in enumerate(x.coords)), Fraction(0)) for x in scaled]
    gram = [[tr[i + j] for j in range(d)] for i in range(d)]
    return gw_from_matrix(SymBilForm(gram))


def bezout_matrix(f: UniPoly, g: UniPoly, n: int) -> SymBilForm:
    """B_n(f, g): coefficients of (f(x)g(y) - f(y)g(x)) / (x - y)."""
    if f.degree != n or f.lc != 1:
        raise ValueError("f must be monic of degree n")
    if g.degree >= n:
        raise ValueError("g must have degree < n")
    fc = list(f.coeffs) + [Fraction(0)] * (n + 1 - len(f.coeffs))
    gc = list(g.coeffs) + [Fraction(0)] * (n + 1 - len(g.coeffs))
    # numerator N[p][q] on x^p y^q
    num = [[fc[p] * gc[q] - gc[p] * fc[q] for q in range(n + 1)] for p in range(n + 1)]
    # synthetic division by (x - y) in the x-variable: Q_{p-1} = N_p + y * Q_p
    quot = [[Fraction(0)] * n for _ in range(n)]  # quot[p][q] on x^p y^q
    carry = [Fraction(0)] * (n + 1)
    for p in range(n, 0, -1):
        qp = [a + b for a, b in zip(num[p], carry)]
        quot[p - 1] = qp[:n]
        carry = [Fraction(0)] + qp[:-1]  # multiply by y
    rem = [a + b for a, b in zip(num[0], carry)]
    assert all(c == 0 for c in rem), "numerator not divisible by x - y"
    return SymBilForm(quot)


def hankel_coefficients(f: UniPoly, g: UniPoly, count: int):
    """First `count` coefficients h_k of g/f = h_0 t^-1 + h_1 t^-2 + ..."""
    if f.is_zero() or f.lc != 1:
        raise ValueError("f must be monic")
    n = f.degree
    fc = f.coeffs
    gc = list(g.coeffs) + [Fraction(0)] * (n - len(g.coeffs))
    hs = []
    for s in range(count):
        v = gc[n - 1 - s] if 0 <= n - 1 - s < n else Fraction(0)
        for i in range(1, min(s, n) + 1):
            v -= fc[n - i] * hs[s - i]
        hs.append(v)
    return hs


def hankel_matrix(f: UniPoly, g: UniPoly, n: int) -> SymBilForm:
    """H_n(f, g) = (h_{i+j}) from the expansion of g/f at infinity."""
    if f.degree != n or f.lc != 1:
        raise ValueError("f must be monic of degree n")
    if g.degree >= n:
        raise ValueError("g must have degree < n")
    hs = hankel_coefficients(f, g, 2 * n - 1)
    return SymBilForm([[hs[i + j] for j in range(n)] for i in range(n)])
