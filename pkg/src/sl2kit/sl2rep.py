"""Binary forms, weight gradings, the SL2 group and Lie-algebra actions,
auxiliary representation spaces, and equivariant maps from highest-weight
vectors.

Basis conventions.  V_d is the space of degree-d forms in x, y with basis
monomial x^i y^(d-i) at index i; that monomial is a torus eigenvector of
weight d - 2i.  The group acts by g.f = f o g^{-1}; infinitesimally a
traceless matrix A acts as the derivation p |-> -dp(Av), which gives
e.x = -y, e.y = 0, h.x = -x, h.y = y, f.x = 0, f.y = -x, so e raises weight
by 2 and f lowers it by 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .kernel import (
    InputError, MultiPoly, Subspace, as_rat, format_rat, mat_identity,
    mat_inverse, mat_mul, mat_vec, span_reduce,
)


def weight_of(d: int, i: int) -> int:
    """Torus weight of the basis monomial x^i y^(d-i) of V_d."""
    if not 0 <= i <= d:
        raise InputError(f"index {i} out of range for degree {d}")
    return d - 2 * i


@dataclass(frozen=True)
class BinaryForm:
    """Degree-d form with exact coefficients; index i <-> x^i y^(d-i)."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise InputError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise InputError(
                f"expected {self.degree + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, d: int, i: int, c=1) -> "BinaryForm":
        """c * x^i y^(d-i)."""
        if not 0 <= i <= d:
            raise InputError(f"index {i} out of range for degree {d}")
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[i] = as_rat(c)
        return cls(d, tuple(coeffs))

    @classmethod
    def zero(cls, d: int) -> "BinaryForm":
        return cls(d, tuple(Fraction(0) for _ in range(d + 1)))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, x0, y0) -> Fraction:
        x0, y0 = as_rat(x0), as_rat(y0)
        d = self.degree
        return sum((c * x0 ** i * y0 ** (d - i)
                    for i, c in enumerate(self.coeffs)), start=Fraction(0))

    def dehomogenize(self) -> MultiPoly:
        """The univariate polynomial f(t, 1)."""
        return MultiPoly(("t",), {(i,): c for i, c in enumerate(self.coeffs)})

    def __str__(self):
        d = self.degree
        parts = []
        for i in range(d, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "" if d - i == 0 else ("y" if d - i == 1 else f"y^{d - i}")
            mono = xs + ("*" if xs and ys else "") + ys
            if not mono:
                parts.append(format_rat(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rat(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def form_product(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Product of two binary forms (coefficient convolution)."""
    d = f.degree + g.degree
    out = [Fraction(0)] * (d + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return BinaryForm(d, tuple(out))


@dataclass(frozen=True)
class GroupElem:
    """Element [[p, q], [r, s]] of SL2 over the rationals."""

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self):
        for name in ("p", "q", "r", "s"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if self.p * self.s - self.q * self.r != 1:
            raise InputError("determinant must be exactly 1")

    @classmethod
    def identity(cls) -> "GroupElem":
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, t) -> "GroupElem":
        t = as_rat(t)
        if t == 0:
            raise InputError("diagonal torus element needs a nonzero parameter")
        return cls(t, 0, 0, Fraction(1) / t)

    @classmethod
    def upper(cls, u) -> "GroupElem":
        return cls(1, u, 0, 1)

    @classmethod
    def lower(cls, u) -> "GroupElem":
        return cls(1, 0, u, 1)

    def mul(self, other: "GroupElem") -> "GroupElem":
        return GroupElem(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )


@dataclass(frozen=True)
class Sl2Elem:
    """Traceless 2x2 matrix [[a, b], [c, -a]] in the Lie algebra of SL2."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    @classmethod
    def from_matrix(cls, m) -> "Sl2Elem":
        if m[0][0] + m[1][1] != 0:
            raise InputError("matrix has nonzero trace")
        return cls(m[0][0], m[0][1], m[1][0])

    def matrix(self):
        return [[self.a, self.b], [self.c, -self.a]]

    def bracket(self, other: "Sl2Elem") -> "Sl2Elem":
        A, B = self.matrix(), other.matrix()
        AB = mat_mul(A, B)
        BA = mat_mul(B, A)
        return Sl2Elem.from_matrix(
            [[AB[0][0] - BA[0][0], AB[0][1] - BA[0][1]],
             [AB[1][0] - BA[1][0], AB[1][1] - BA[1][1]]])


E = Sl2Elem(0, 1, 0)
H = Sl2Elem(1, 0, 0)
F = Sl2Elem(0, 0, 1)


@dataclass(frozen=True)
class RepSpace:
    """Representation space with exact e/h/f action matrices.

    act_h is diagonal in the declared weights, act_e raises weight by 2 and
    act_f lowers it by 2; commutators satisfy the sl2 relations exactly.
    """

    kind: str
    d: Optional[int]
    dim: int
    weights: tuple
    act_e: tuple
    act_h: tuple
    act_f: tuple

    def act(self, A: Sl2Elem):
        """Action matrix of a traceless element a*h + b*e + c*f."""
        return [
            [A.a * self.act_h[i][j] + A.b * self.act_e[i][j] + A.c * self.act_f[i][j]
             for j in range(self.dim)]
            for i in range(self.dim)
        ]


def lie_action_matrix(R: RepSpace, A: Sl2Elem):
    return R.act(A)


def _freeze(mat):
    return tuple(tuple(as_rat(x) for x in row) for row in mat)


def _rep_v(d: int) -> RepSpace:
    n = d + 1
    e = [[Fraction(0)] * n for _ in range(n)]
    f = [[Fraction(0)] * n for _ in range(n)]
    h = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = Fraction(d - 2 * i)
        if i >= 1:
            e[i - 1][i] = Fraction(-i)          # e: x^i y^(d-i) -> -i x^(i-1) y^(d-i+1)
        if i + 1 <= d:
            f[i + 1][i] = Fraction(-(d - i))    # f: x^i y^(d-i) -> -(d-i) x^(i+1) y^(d-i-1)
    return RepSpace("V", d, n, tuple(d - 2 * i for i in range(n)),
                    _freeze(e), _freeze(h), _freeze(f))


def _rep_adj() -> RepSpace:
    # basis (e, h, f); columns are ad(X) applied to the basis
    e = [[0, -2, 0], [0, 0, 1], [0, 0, 0]]
    h = [[2, 0, 0], [0, 0, 0], [0, 0, -2]]
    f = [[0, 0, 0], [-1, 0, 0], [0, 2, 0]]
    return RepSpace("SL2ADJ", None, 3, (2, 0, -2),
                    _freeze(e), _freeze(h), _freeze(f))


def _rep_tensor() -> RepSpace:
    adj = _rep_adj()
    n = 9

    def kron_sum(m):
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in range(3):
            for j in range(3):
                col = 3 * i + j
                for a in range(3):
                    if m[a][i] != 0:
                        out[3 * a + j][col] += m[a][i]
                    if m[a][j] != 0:
                        out[3 * i + a][col] += m[a][j]
        return out

    weights = tuple(adj.weights[i] + adj.weights[j]
                    for i in range(3) for j in range(3))
    return RepSpace("SL2TENSOR", None, n, weights,
                    _freeze(kron_sum(adj.act_e)),
                    _freeze(kron_sum(adj.act_h)),
                    _freeze(kron_sum(adj.act_f)))


def _rep_end(d: int) -> RepSpace:
    # basis E_{rc} at index (d+1)*r + c, acting by the commutator [rho(X), -]
    v = _rep_v(d)
    n = d + 1
    dim = n * n

    def commut(m):
        out = [[Fraction(0)] * dim for _ in range(dim)]
        for r in range(n):
            for c in range(n):
                col = n * r + c
                for a in range(n):
                    if m[a][r] != 0:
                        out[n * a + c][col] += m[a][r]      # rho(X) E_rc
                    if m[c][a] != 0:
                        out[n * r + a][col] -= m[c][a]      # -E_rc rho(X)
        return out

    weights = tuple(v.weights[r] - v.weights[c]
                    for r in range(n) for c in range(n))
    return RepSpace("END", d, dim, weights,
                    _freeze(commut(v.act_e)),
                    _freeze(commut(v.act_h)),
                    _freeze(commut(v.act_f)))


@lru_cache(maxsize=None)
def make_rep(kind: str, d: Optional[int] = None) -> RepSpace:
    """Build one of the supported representation spaces.

    kind 'V' and 'END' require a degree d >= 0; 'SL2ADJ' and 'SL2TENSOR'
    take none.
    """
    if kind == "V":
        if d is None or d < 0:
            raise InputError("kind 'V' needs a degree d >= 0")
        return _rep_v(d)
    if kind == "SL2ADJ":
        return _rep_adj()
    if kind == "SL2TENSOR":
        return _rep_tensor()
    if kind == "END":
        if d is None or d < 0:
            raise InputError("kind 'END' needs a degree d >= 0")
        return _rep_end(d)
    raise InputError(f"unknown representation kind {kind!r}", field="kind")


def apply_linear_substitution(coeffs: Sequence, xx, xy, yx, yy):
    """Coefficients of f(xx*x + xy*y, yx*x + yy*y).

    Works generically: the four entries and the coefficients may be exact
    rationals or polynomials sharing one ring.
    """
    d = len(coeffs) - 1
    zero = None
    for v in (xx, xy, yx, yy, *coeffs):
        if isinstance(v, MultiPoly):
            zero = MultiPoly.zero(v.variables)
            break
    if zero is None:
        zero = Fraction(0)
        xx, xy, yx, yy = as_rat(xx), as_rat(xy), as_rat(yx), as_rat(yy)

    def conv(a, b):
        out = [zero] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return out

    # degree-1 coefficient lists for the images of x and y (index 0 is the
    # y-coefficient, index 1 the x-coefficient)
    img_x = [xy, xx]
    img_y = [yy, yx]
    powers_x = [[zero + 1]]
    powers_y = [[zero + 1]]
    for _ in range(d):
        powers_x.append(conv(powers_x[-1], img_x))
        powers_y.append(conv(powers_y[-1], img_y))
    out = [zero] * (d + 1)
    for i, c in enumerate(coeffs):
        if isinstance(c, MultiPoly):
            if c.is_zero:
                continue
        elif c == 0:
            continue
        term = conv(powers_x[i], powers_y[d - i])
        for j in range(d + 1):
            out[j] = out[j] + c * term[j]
    return out


def group_action(g: GroupElem, f: BinaryForm) -> BinaryForm:
    """Left action (g.f)(v) = f(g^{-1} v): substitute x -> s*x - q*y,
    y -> -r*x + p*y."""
    coeffs = apply_linear_substitution(f.coeffs, g.s, -g.q, -g.r, g.p)
    return BinaryForm(f.degree, tuple(coeffs))


def extend_from_highest_weight(src: RepSpace, hw_src: Sequence,
                               tgt: RepSpace, hw_tgt: Sequence):
    """The unique equivariant map sending one highest-weight vector to
    another of the same weight.

    Requires both vectors to be nonzero, annihilated by e, of equal weight
    lambda, with the source irreducible of highest weight lambda (checked:
    f^(lambda+1) kills hw_src and the lowered chain is a basis).  Returns the
    tgt.dim x src.dim matrix sending f^j(hw_src) to f^j(hw_tgt).
    """
    hw_src = [as_rat(x) for x in hw_src]
    hw_tgt = [as_rat(x) for x in hw_tgt]
    if all(x == 0 for x in hw_src) or all(x == 0 for x in hw_tgt):
        raise InputError("highest-weight vectors must be nonzero")
    for R, v, label in ((src, hw_src, "source"), (tgt, hw_tgt, "target")):
        img = mat_vec([list(r) for r in R.act_e], v)
        if any(x != 0 for x in img):
            raise InputError(f"{label} vector is not annihilated by e")

    def weight_of_vec(R, v):
        img = mat_vec([list(r) for r in R.act_h], v)
        lam = None
        for got, have in zip(img, v):
            if have != 0:
                w = got / have
                if w.denominator != 1:
                    raise InputError("vector is not a weight vector")
                if lam is None:
                    lam = int(w)
                elif lam != int(w):
                    raise InputError("vector is not a weight vector")
            elif got != 0:
                raise InputError("vector is not a weight vector")
        return lam

    lam = weight_of_vec(src, hw_src)
    if lam != weight_of_vec(tgt, hw_tgt):
        raise InputError("highest-weight vectors have different weights")
    if lam < 0:
        raise InputError("highest weight must be nonnegative")
    if src.dim != lam + 1:
        raise InputError("source is not irreducible of the stated highest weight")

    fs = [list(r) for r in src.act_f]
    ft = [list(r) for r in tgt.act_f]
    chain_src, chain_tgt = [hw_src], [hw_tgt]
    for _ in range(lam):
        chain_src.append(mat_vec(fs, chain_src[-1]))
        chain_tgt.append(mat_vec(ft, chain_tgt[-1]))
    beyond = mat_vec(fs, chain_src[-1])
    if any(x != 0 for x in beyond):
        raise InputError("lowering does not terminate at the stated weight")
    if span_reduce(chain_src).dim != lam + 1:
        raise InputError("lowered chain is not linearly independent")
    # columns of C_src are the chain vectors; L = C_tgt . C_src^{-1}
    c_src = [[chain_src[j][i] for j in range(lam + 1)] for i in range(src.dim)]
    c_tgt = [[chain_tgt[j][i] for j in range(lam + 1)] for i in range(tgt.dim)]
    return mat_mul(c_tgt, mat_inverse(c_src))


def subspace_vplus(d: int) -> Subspace:
    """Coordinate subspace of V_d spanned by the positive-weight monomials."""
    if d < 1:
        raise InputError("positive-weight subspace needs d >= 1")
    rows = []
    for i in range(d + 1):
        if weight_of(d, i) > 0:
            row = [Fraction(0)] * (d + 1)
            row[i] = Fraction(1)
            rows.append(row)
    return span_reduce(rows, ambient_dim=d + 1)


def subspace_vplusplus(d: int) -> Subspace:
    """Coordinate subspace of V_d with weights 2, 6, 8, 10, ... (weight 4
    omitted); defined for even d."""
    if d < 1:
        raise InputError("needs d >= 1")
    if d % 2 != 0:
        raise InputError("weight-filtered subspace V++ needs even d")
    rows = []
    for i in range(d + 1):
        w = weight_of(d, i)
        if w == 2 or w >= 6:
            row = [Fraction(0)] * (d + 1)
            row[i] = Fraction(1)
            rows.append(row)
    return span_reduce(rows, ambient_dim=d + 1)
