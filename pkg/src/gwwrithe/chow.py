"""Determinantal Chow-form matrices.

Two routes to the same object: the tensor-algebra product of the matrices of
a linear free resolution, and the signed permutation sum attached to a
Koszul complex of commuting matrices.  Both produce a square matrix whose
entries are alternating multilinear forms in the ambient coordinates, here
stored as coefficient matrices indexed by strictly increasing index tuples
(the wedge basis).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg


class NotAlternating(ValueError):
    """The tensor product of the given chain is not alternating (not a complex)."""


class NonCommuting(ValueError):
    """The evaluated matrix family fails the commutativity consistency check."""


class LinFormMatrix:
    """Matrix of linear forms sum_l x_l * C_l, stored by coefficient matrices."""

    __slots__ = ("rows", "cols", "nvars", "coeff")

    def __init__(self, rows: int, cols: int, nvars: int, coeff):
        coeff = tuple(linalg.mat(c) for c in coeff)
        if len(coeff) != nvars:
            raise ValueError("need one coefficient matrix per variable")
        for c in coeff:
            if len(c) != rows or any(len(r) != cols for r in c):
                raise ValueError("coefficient matrix shape mismatch")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, name, value):
        raise AttributeError("LinFormMatrix is immutable")

    @classmethod
    def from_entries(cls, entries, nvars: int) -> "LinFormMatrix":
        """Build from a rows x cols nested list whose entries are vectors of
        variable coefficients (entry = sum_l entry[l] * x_l)."""
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        coeff = [
            [[Fraction(entries[i][j][l]) for j in range(cols)] for i in range(rows)]
            for l in range(nvars)
        ]
        return cls(rows, cols, nvars, coeff)

    def evaluate(self, v) -> tuple:
        """Constant matrix sum_l v_l * C_l."""
        if len(v) != self.nvars:
            raise ValueError("evaluation vector has wrong length")
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for vl, c in zip(v, self.coeff):
            vl = Fraction(vl)
            if vl:
                for i in range(self.rows):
                    row = c[i]
                    oi = out[i]
                    for j in range(self.cols):
                        oi[j] += vl * row[j]
        return tuple(tuple(r) for r in out)

    def entry(self, i: int, j: int) -> tuple:
        """Coefficient vector of the (i, j) entry."""
        return tuple(c[i][j] for c in self.coeff)

    def transpose(self) -> "LinFormMatrix":
        return LinFormMatrix(self.cols, self.rows, self.nvars,
                             [linalg.transpose(c) for c in self.coeff])

    def __neg__(self):
        return LinFormMatrix(self.rows, self.cols, self.nvars,
                             [linalg.mat_scale(c, -1) for c in self.coeff])

    def __repr__(self):
        return f"LinFormMatrix({self.rows}x{self.cols}, nvars={self.nvars})"


class PlueckerLinearMatrix:
    """Square matrix of alternating c-linear forms, stored as one constant
    d x d coefficient matrix per strictly increasing c-tuple of variable
    indices (wedge basis element)."""

    __slots__ = ("dim", "codim", "nvars", "coeff")

    def __init__(self, dim: int, codim: int, nvars: int, coeff):
        table = {}
        for key in itertools.combinations(range(nvars), codim):
            c = coeff.get(key)
            table[key] = linalg.mat(c) if c is not None else linalg.zeros(dim, dim)
            if len(table[key]) != dim or any(len(r) != dim for r in table[key]):
                raise ValueError("coefficient matrix shape mismatch")
        unknown = set(coeff) - set(table)
        if unknown:
            raise ValueError(f"non-wedge index tuples: {sorted(unknown)}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "codim", codim)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeff", table)

    def __setattr__(self, name, value):
        raise AttributeError("PlueckerLinearMatrix is immutable")

    def wedge_indices(self):
        return sorted(self.coeff)

    def entry(self, i: int, j: int):
        """{index tuple: coefficient} of the (i, j) entry, zeros omitted."""
        return {key: c[i][j] for key, c in self.coeff.items() if c[i][j] != 0}

    def __eq__(self, other):
        if not isinstance(other, PlueckerLinearMatrix):
            return NotImplemented
        return (self.dim, self.codim, self.nvars) == (other.dim, other.codim, other.nvars) \
            and self.coeff == other.coeff

    def __repr__(self):
        return f"PlueckerLinearMatrix(dim={self.dim}, codim={self.codim}, nvars={self.nvars})"


def gamma_from_resolution(matrices) -> PlueckerLinearMatrix:
    """Product of the resolution matrices in the tensor algebra, verified
    alternating entrywise and collected on the wedge basis.

    The coefficient on the wedge index (j_1 < ... < j_c) is the tensor
    coefficient of x_{j_1} (x) ... (x) x_{j_c); no 1/c! normalization.
    """
    if not matrices:
        raise ValueError("empty resolution")
    nvars = matrices[0].nvars
    c = len(matrices)
    d = matrices[0].rows
    if matrices[-1].cols != d:
        raise ValueError("first rows and last cols must agree")
    for a, b in zip(matrices, matrices[1:]):
        if a.cols != b.rows:
            raise ValueError("matrix shapes do not chain")
        if b.nvars != nvars:
            raise ValueError("mixed variable counts")

    # tensor[(l_1, ..., l_c)] = C^(1)_{l_1} * ... * C^(c)_{l_c}
    tensor = {}
    for tup in itertools.product(range(nvars), repeat=c):
        prod = matrices[0].coeff[tup[0]]
        for a, l in zip(matrices[1:], tup[1:]):
            prod = linalg.mat_mul(prod, a.coeff[l])
        tensor[tup] = prod

    zero = linalg.zeros(d, d)
    for tup, m in tensor.items():
        for k in range(c - 1):
            swapped = tup[:k] + (tup[k + 1], tup[k]) + tup[k + 2:]
            if linalg.mat_add(m, tensor[swapped]) != zero:
                raise NotAlternating(
                    f"tensor coefficient at {tup} does not flip sign under "
                    f"swapping slots {k},{k + 1}")

    coeff = {key: tensor[key] for key in itertools.combinations(range(nvars), c)}
    return PlueckerLinearMatrix(d, c, nvars, coeff)


def koszul_gamma(matrices, vectors) -> tuple:
    """Signed permutation sum sum_tau sgn(tau) A_{tau(1)}(v_1) ... A_{tau(c)}(v_c)
    for a commuting family of square matrices of linear forms.

    Commutativity of the evaluated family is checked on the span of the
    supplied vectors (polarized identity); NonCommuting on failure.
    """
    c = len(matrices)
    if len(vectors) != c:
        raise ValueError("need exactly one vector per matrix")
    d = matrices[0].rows
    for a in matrices:
        if a.rows != d or a.cols != d:
            raise ValueError("matrices must be square of equal size")
    evals = [[a.evaluate(v) for v in vectors] for a in matrices]
    for i in range(c):
        for j in range(i + 1, c):
            for x in range(len(vectors)):
                for y in range(x, len(vectors)):
                    lhs = linalg.mat_add(linalg.mat_mul(evals[i][x], evals[j][y]),
                                         linalg.mat_mul(evals[i][y], evals[j][x]))
                    rhs = linalg.mat_add(linalg.mat_mul(evals[j][y], evals[i][x]),
                                         linalg.mat_mul(evals[j][x], evals[i][y]))
                    if lhs != rhs:
                        raise NonCommuting(
                            f"matrices {i} and {j} do not commute on the "
                            f"span of the supplied vectors")
    total = linalg.zeros(d, d)
    for tau in itertools.permutations(range(c)):
        sign = _perm_sign(tau)
        prod = evals[tau[0]][0]
        for slot in range(1, c):
            prod = linalg.mat_mul(prod, evals[tau[slot]][slot])
        total = linalg.mat_add(total, prod) if sign > 0 else linalg.mat_sub(total, prod)
    return total


def _perm_sign(tau) -> int:
    sign = 1
    for i in range(len(tau)):
        for j in range(i + 1, len(tau)):
            if tau[i] > tau[j]:
                sign = -sign
    return sign


def koszul_complex(matrices) -> list:
    """Koszul complex of a commuting family A_1..A_c of d x d matrices of
    linear forms: the chain of maps [phi_1, ..., phi_c] with phi_1 the
    row (A_1 ... A_c), in wedge-basis ordering with standard signs."""
    c = len(matrices)
    d = matrices[0].rows
    nvars = matrices[0].nvars
    out = []
    for step in range(1, c + 1):
        src = list(itertools.combinations(range(c), step))
        dst = list(itertools.combinations(range(c), step - 1))
        blocks = {}
        for col, subset in enumerate(src):
            for pos, idx in enumerate(subset):
                rest = subset[:pos] + subset[pos + 1:]
                row = dst.index(rest)
                blocks[(row, col)] = (pos, idx)
        coeff = []
        for l in range(nvars):
            big = [[Fraction(0)] * (len(src) * d) for _ in range(len(dst) * d)]
            for (row, col), (pos, idx) in blocks.items():
                block = matrices[idx].coeff[l]
                sign = -1 if pos % 2 else 1
                for i in range(d):
                    for j in range(d):
                        big[row * d + i][col * d + j] = sign * block[i][j]
            coeff.append(big)
        out.append(LinFormMatrix(len(dst) * d, len(src) * d, nvars, coeff))
    return out


def plucker_eval(gamma: PlueckerLinearMatrix, w):
    """Evaluate at a Plücker coefficient vector.

    `w` is either a dict {index tuple: value} or a sequence in the order of
    `wedge_indices()`.  Returns a SymBilForm when the result is symmetric,
    otherwise the plain matrix (tuple of tuples).
    """
    keys = gamma.wedge_indices()
    if isinstance(w, dict):
        coords = {tuple(k): Fraction(v) for k, v in w.items()}
        unknown = set(coords) - set(keys)
        if unknown:
            raise ValueError(f"unknown wedge indices: {sorted(unknown)}")
        vec = [coords.get(k, Fraction(0)) for k in keys]
    else:
        vec = [Fraction(v) for v in w]
        if len(vec) != len(keys):
            raise ValueError("coordinate vector has wrong length")
    d = gamma.dim
    out = [[Fraction(0)] * d for _ in range(d)]
    for k, v in zip(keys, vec):
        if v:
            block = gamma.coeff[k]
            for i in range(d):
                for j in range(d):
                    out[i][j] += v * block[i][j]
    result = tuple(tuple(r) for r in out)
    if all(result[i][j] == result[j][i] for i in range(d) for j in range(i)):
        from .forms import SymBilForm

        return SymBilForm(result)
    return result


def plucker_line(p, q):
    """Plücker coordinates {(i, j): p_i q_j - p_j q_i, i < j} of the line
    through two points of P^3 (or P^n)."""
    n = len(p)
    p = [Fraction(x) for x in p]
    q = [Fraction(x) for x in q]
    return {(i, j): p[i] * q[j] - p[j] * q[i]
            for i in range(n) for j in range(i + 1, n)}


# fixtures printed in the source material ------------------------------------

def twisted_cubic_resolution():
    """The 3x6 and 6x3 resolution matrices of the twisted cubic's pushed-
    forward degree-2 line bundle; variables x_0..x_3."""
    x0, x1, x2, x3 = (tuple(1 if l == k else 0 for l in range(4)) for k in range(4))
    zero = (0, 0, 0, 0)

    def neg(v):
        return tuple(-c for c in v)

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    a1 = [
        [neg(x1), neg(x2), neg(x2), neg(x3), neg(x3), zero],
        [x0, zero, x1, zero, x2, neg(x3)],
        [zero, x0, zero, x1, zero, x2],
    ]
    a2_t = [
        [neg(x2), x1, zero, neg(x0), x0, zero],
        [neg(x3), x2, neg(x2), zero, x1, neg(x0)],
        [zero, zero, x3, neg(x2), zero, x1],
    ]
    a2 = [[a2_t[j][i] for j in range(3)] for i in range(6)]
    return (LinFormMatrix.from_entries(a1, 4), LinFormMatrix.from_entries(a2, 4))


def twisted_cubic_gamma_printed() -> PlueckerLinearMatrix:
    """The printed 3x3 Plücker matrix of the twisted cubic:
    [[-x12, -x13, x23], [x02, x12+x03, -x13], [-x01, -x02, x12]]."""
    entries = {
        (0, 1): [[0, 0, 0], [0, 0, 0], [-1, 0, 0]],
        (0, 2): [[0, 0, 0], [1, 0, 0], [0, -1, 0]],
        (0, 3): [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
        (1, 2): [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
        (1, 3): [[0, -1, 0], [0, 0, -1], [0, 0, 0]],
        (2, 3): [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    }
    return PlueckerLinearMatrix(3, 2, 4, entries)


def elliptic_curve_lambda() -> PlueckerLinearMatrix:
    """The symmetric 4x4 matrix of linear forms in the Plücker coordinates
    attached to the elliptic curve y^2 = x^3 - x embedded by (1, x, y, x^2),
    hard-coded from its printed form."""
    entries = {
        (0, 1): [[0, 0, 0, 1], [0, 0, 0, -1], [0, 0, 0, 0], [1, -1, 0, 0]],
        (0, 2): [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]],
        (0, 3): [[0, 0, 1, 1], [0, 0, -1, 0], [1, -1, 0, 0], [1, 0, 0, 0]],
        (1, 2): [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
        (1, 3): [[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
        (2, 3): [[-1, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    }
    return PlueckerLinearMatrix(4, 2, 4, entries)
