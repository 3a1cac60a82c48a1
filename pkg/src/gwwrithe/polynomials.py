"""Dense exact polynomial arithmetic over Q: univariate polynomials and
binary forms.

Everything here is immutable and pure; values can be shared freely between
threads.  The zero polynomial has the sentinel degree -1.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class UniPoly:
    """Univariate polynomial over Q, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x_power(cls, k: int) -> "UniPoly":
        return cls([0] * k + [1])

    @property
    def degree(self) -> int:
        # -1 is the sentinel degree of the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.__coeff(i) + other.__coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else UniPoly([-_frac(other)]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting +,* with Fraction."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)!r})"

    def __str__(self):
        return format_unipoly(self)


def format_unipoly(f: UniPoly, var: str = "t") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            term = f"{head}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: UniPoly, g: UniPoly) -> UniPoly:
    if f.is_zero() or g.is_zero():
        return UniPoly()
    return ((f * g) // poly_gcd(f, g)).monic()


def poly_gcdex(f: UniPoly, g: UniPoly):
    """Extended Euclid: (d, u, v) monic with u*f + v*g = d = gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = 1 / r0.lc
    return r0 * c, s0 * c, t0 * c


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.

    Sylvester convention; Res(f, g) = (-1)^(deg f * deg g) Res(g, f).
    """
    if f.is_zero():
        raise ValueError("resultant requires nonzero f")
    if g.is_zero():
        return Fraction(1) if f.degree == 0 else Fraction(0)
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    # Euclidean recursion: Res(f,g) = (-1)^(df dg) lc(g)^(df-dr) Res(g, r)
    r = f % g
    sign = -1 if (f.degree * g.degree) % 2 else 1
    if r.is_zero():
        return Fraction(0)
    dr = r.degree
    return sign * g.lc ** (f.degree - dr) * resultant(g, r)


def lagrange_interpolate(points) -> UniPoly:
    """Exact interpolation through (x_i, y_i) with distinct rational x_i."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    result = UniPoly()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        num = UniPoly([yi])
        den = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            num = num * UniPoly([-xj, 1])
            den *= xi - xj
        result = result + num * (1 / den)
    return result


class BinaryForm:
    """Homogeneous form in (r, s); coeffs[i] multiplies r^(n-i) s^i."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        cs = tuple(_frac(c) for c in coeffs)
        if len(cs) != degree + 1:
            raise ValueError(f"degree {degree} form needs {degree + 1} coefficients")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinaryForm) or other.degree != self.degree:
            return NotImplemented
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, scalar):
        return BinaryForm(self.degree, [c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self):
        return self * Fraction(-1)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, r, s):
        acc = None
        n = self.degree
        for i, c in enumerate(self.coeffs):
            term = c * r ** (n - i) * s ** i
            acc = term if acc is None else acc + term
        return acc

    def dehomogenize(self) -> UniPoly:
        """Chart t = s/r: returns p(1, t)."""
        return UniPoly(self.coeffs)

    def at_infinity_chart(self) -> UniPoly:
        """Chart tbar = -r/s: returns p(-x, 1) as a polynomial in x."""
        n = self.degree
        return UniPoly([(-1) ** j * self.coeffs[n - j] for j in range(n + 1)])

    def __str__(self):
        return format_binaryform(self)

    def __repr__(self):
        return f"BinaryForm({self.degree}, {list(self.coeffs)})"


def format_binaryform(p: BinaryForm) -> str:
    n = p.degree
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        factors = []
        if n - i > 0:
            factors.append("r" + (f"^{n - i}" if n - i > 1 else ""))
        if i > 0:
            factors.append("s" + (f"^{i}" if i > 1 else ""))
        mono = "*".join(factors) if factors else None
        mag = abs(c)
        if mono is None:
            term = str(mag)
        elif mag == 1:
            term = mono
        else:
            term = f"{mag}*{mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def binaryform_gcd_degree(forms) -> int:
    """Degree of the common binary-form factor of the given forms.

    A common root at (0:1) (all dehomogenizations drop degree) counts like
    any other root; returns 0 when the forms are collectively coprime.
    """
    forms = [p for p in forms if not p.is_zero()]
    if not forms:
        raise ValueError("all forms are zero")
    g = None
    for p in forms:
        f = p.dehomogenize()
        g = f if g is None else poly_gcd(g, f)
        if g.degree == 0:
            break
    finite_part = 0 if g.degree <= 0 else g.degree
    # power of r dividing every form = common root at infinity of t = s/r? No:
    # r | p iff the s^n coefficient vanishes iff deg of p(1,t) < n.
    inf_mult = min(p.degree - p.dehomogenize().degree for p in forms)
    return finite_part + inf_mult
