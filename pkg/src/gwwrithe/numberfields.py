"""Number fields Q[z]/(m(z)) with trace maps, plus one-step quadratic
extensions F[T]/(T^2 - e1*T + e2).

The quadratic step deliberately allows a *reducible* defining polynomial:
the quotient is then a product of fields and all the arithmetic used here
(conjugation, norms, inversion of units) stays valid.  Galois-symmetric
quantities are pulled back to the base field with :func:`quad_reduce`.
"""

from __future__ import annotations

from fractions import Fraction

from .factorization import is_irreducible
from .polynomials import UniPoly, poly_gcdex


class NotGaloisSymmetric(ArithmeticError):
    """An element claimed to be invariant under T -> e1 - T is not."""


class NumberField:
    """Q[z]/(m(z)) for a monic irreducible m, in the power basis 1, z, ..., z^(d-1)."""

    __slots__ = ("min_poly", "degree", "_power_traces", "_reduction_rows")

    def __init__(self, min_poly: UniPoly, check: bool = True):
        min_poly = min_poly.monic()
        if min_poly.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if check and min_poly.degree > 1 and not is_irreducible(min_poly):
            raise ValueError(f"{min_poly} is not irreducible over Q")
        object.__setattr__(self, "min_poly", min_poly)
        object.__setattr__(self, "degree", min_poly.degree)
        object.__setattr__(self, "_power_traces", None)
        object.__setattr__(self, "_reduction_rows", None)

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({self.min_poly})"

    def __call__(self, value) -> "NFElem":
        """Coerce a rational, coefficient list or UniPoly into the field."""
        if isinstance(value, NFElem):
            if value.parent != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return NFElem(self, [value] + [0] * (self.degree - 1))
        if isinstance(value, UniPoly):
            value = list((value % self.min_poly).coeffs)
        coords = [Fraction(c) for c in value]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NFElem(self, coords)

    @property
    def zero(self) -> "NFElem":
        return self(0)

    @property
    def one(self) -> "NFElem":
        return self(1)

    @property
    def gen(self) -> "NFElem":
        return self(UniPoly([0, 1]))

    def _rows_of_reduction(self):
        """Rows r_k = coords of z^k mod m for k = 0 .. 2d-2."""
        rows = self._reduction_rows
        if rows is None:
            d = self.degree
            rows = []
            current = [Fraction(0)] * d
            current[0] = Fraction(1)
            rows.append(tuple(current))
            m = self.min_poly.coeffs
            for _ in range(2 * d - 2):
                top = current[-1]
                nxt = [Fraction(0)] + current[:-1]
                if top:
                    for i in range(d):
                        nxt[i] -= top * m[i]
                current = nxt
                rows.append(tuple(current))
            object.__setattr__(self, "_reduction_rows", tuple(rows))
        return self._reduction_rows

    def power_traces(self):
        """Tr(z^k) for k = 0 .. 2d-2 via Newton's identities."""
        traces = self._power_traces
        if traces is None:
            d = self.degree
            c = self.min_poly.coeffs  # c[0] + ... + c[d-1] z^(d-1) + z^d
            p = [Fraction(d)]
            for k in range(1, 2 * d - 1):
                if k <= d:
                    s = -k * c[d - k]
                    for i in range(1, k):
                        s -= c[d - i] * p[k - i]
                else:
                    s = Fraction(0)
                    for i in range(1, d + 1):
                        s -= c[d - i] * p[k - i]
                p.append(s)
            traces = tuple(p)
            object.__setattr__(self, "_power_traces", traces)
        return traces


class NFElem:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: NumberField, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != parent.degree:
            raise ValueError("coordinate length does not match field degree")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("NFElem is immutable")

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.parent != self.parent:
                raise ValueError("mismatched parent fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.parent, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.parent, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.parent, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.parent, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.parent.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    prod[i + j] += a * b
        rows = self.parent._rows_of_reduction()
        out = [Fraction(0)] * d
        for k, c in enumerate(prod):
            if c:
                row = rows[k]
                for i in range(d):
                    out[i] += c * row[i]
        return NFElem(self.parent, out)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, u, _ = poly_gcdex(UniPoly(self.coords), self.parent.min_poly)
        assert g.degree == 0
        return self.parent(u * (1 / g.coeffs[0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.parent(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.parent.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def as_poly(self) -> UniPoly:
        return UniPoly(self.coords)

    def rational(self) -> Fraction:
        """The value as a rational; only valid for elements of Q-coordinates."""
        if any(c != 0 for c in self.coords[1:]):
            raise ValueError("element is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"NFElem({format_nf(self)})"

    def __str__(self):
        return format_nf(self)


def format_nf(x: NFElem) -> str:
    from .polynomials import format_unipoly

    return format_unipoly(UniPoly(x.coords), var="z")


def nf_trace(x: NFElem) -> Fraction:
    """Trace of the multiplication-by-x endomorphism."""
    traces = x.parent.power_traces()
    return sum((c * traces[k] for k, c in enumerate(x.coords)), Fraction(0))


QQ = NumberField(UniPoly([0, 1]), check=False)  # Q itself, min_poly z


class QuadExtElem:
    """Element c0 + c1*T of F[T]/(T^2 - e1*T + e2) over a number field F.

    The defining quadratic may be reducible; then the quotient is a product
    of two fields and elements may be zero divisors.  `inverse` succeeds
    exactly on units (nonzero norm).
    """

    __slots__ = ("base", "e1", "e2", "c0", "c1")

    def __init__(self, base: NumberField, e1, e2, c0, c1):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "e1", base(e1))
        object.__setattr__(self, "e2", base(e2))
        object.__setattr__(self, "c0", base(c0))
        object.__setattr__(self, "c1", base(c1))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExtElem is immutable")

    def _same_ext(self, other: "QuadExtElem") -> bool:
        return self.base == other.base and self.e1 == other.e1 and self.e2 == other.e2

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            if not self._same_ext(other):
                raise ValueError("mismatched quadratic extensions")
            return other
        if isinstance(other, (int, Fraction, NFElem)):
            return QuadExtElem(self.base, self.e1, self.e2, self.base(other), 0)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.base, self.e1, self.e2, self.c0, self.c1))

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _make(self, c0, c1):
        return QuadExtElem(self.base, self.e1, self.e2, c0, c1)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.c0, -self.c1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (c0 + c1 T)(d0 + d1 T) with T^2 = e1 T - e2
        c0, c1, d0, d1 = self.c0, self.c1, o.c0, o.c1
        cross = c1 * d1
        return self._make(c0 * d0 - cross * self.e2, c0 * d1 + c1 * d0 + cross * self.e1)

    __rmul__ = __mul__

    def conj(self) -> "QuadExtElem":
        """The Galois involution T -> e1 - T."""
        return self._make(self.c0 + self.c1 * self.e1, -self.c1)

    def norm(self) -> NFElem:
        prod = self * self.conj()
        assert prod.c1.is_zero()
        return prod.c0

    def is_unit(self) -> bool:
        return not self.norm().is_zero()

    def inverse(self) -> "QuadExtElem":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("not a unit in the quadratic extension")
        conj = self.conj()
        inv_n = n.inverse()
        return self._make(conj.c0 * inv_n, conj.c1 * inv_n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._make(self.base(1), 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"QuadExtElem({self.c0} + ({self.c1})*T mod T^2 - ({self.e1})*T + {self.e2})"


def quad_ext_gen(base: NumberField, e1, e2) -> QuadExtElem:
    """The image of T in F[T]/(T^2 - e1*T + e2)."""
    return QuadExtElem(base, e1, e2, 0, 1)


def quad_reduce(x: QuadExtElem) -> NFElem:
    """Descend a Galois-invariant element to the base field.

    Raises NotGaloisSymmetric when the T-coordinate is nonzero, which means
    a caller claimed symmetry it does not have.
    """
    if not x.c1.is_zero():
        raise NotGaloisSymmetric(f"element has T-coordinate {x.c1}")
    return x.c0


def is_unit(x) -> bool:
    """Unit test across the coefficient rings used by the writhe engine."""
    if isinstance(x, QuadExtElem):
        return x.is_unit()
    if isinstance(x, NFElem):
        return not x.is_zero()
    return Fraction(x) != 0


# generic polynomial helpers over any of our exact fields ---------------------

def fpoly_trim(cs):
    cs = list(cs)
    while cs and (cs[-1].is_zero() if hasattr(cs[-1], "is_zero") else cs[-1] == 0):
        cs.pop()
    return cs


def fpoly_divmod(a, b):
    """Division with remainder for coefficient lists (lowest degree first)
    over a field whose elements support the arithmetic dunders."""
    a = list(a)
    b = fpoly_trim(b)
    if not b:
        raise ZeroDivisionError
    db = len(b) - 1
    inv = 1 / b[-1] if isinstance(b[-1], Fraction) else b[-1].inverse()
    q = [None] * max(len(a) - db, 0)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] * inv
        q[k] = c
        for j, x in enumerate(b):
            a[k + j] = a[k + j] - c * x
    return fpoly_trim(q), fpoly_trim(a[:db] if db else [])


def fpoly_gcd_monic(a, b):
    a, b = fpoly_trim(a), fpoly_trim(b)
    while b:
        a, b = b, fpoly_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1] if isinstance(a[-1], Fraction) else a[-1].inverse()
        a = [c * inv for c in a]
    return a
