"""Exact computational substrate: rationals, sparse multivariate polynomials,
rational functions, reduced-row-echelon subspaces, and Pluecker coordinates.

All values are immutable after construction, all operations are pure, and all
arithmetic is exact (no floating point anywhere).  Monomials are compared in
graded lexicographic order with respect to the declared variable tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Sequence


class InputError(ValueError):
    """An argument violated a documented precondition."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


def as_rat(x) -> Fraction:
    """Coerce an int or Fraction to Fraction.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise InputError(f"expected an exact rational, got {type(x).__name__}")


def format_rat(x: Fraction) -> str:
    """Render as 'n/d', or plain 'n' when the denominator is 1."""
    x = as_rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return as_rat(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational {s!r}: {exc}") from exc
    raise InputError(f"expected rational string, got {type(s).__name__}")


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial over Q in a fixed ordered tuple of variables.

    ``terms`` maps exponent tuples to nonzero Fraction coefficients; no zero
    coefficient is ever stored.  Arithmetic between two polynomials requires
    identical variable tuples.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping] = None):
        variables = tuple(variables)
        nvars = len(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            c = as_rat(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise InputError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent in {exps}")
            clean[exps] = c
        self.variables = variables
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables, c) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): as_rat(c)})

    @classmethod
    def var(cls, variables, name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}", field=name)
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exps, c=1) -> "MultiPoly":
        return cls(variables, {tuple(exps): as_rat(c)})

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self._var_index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self) -> tuple:
        """(exponents, coefficient) of the graded-lex leading term."""
        if self.is_zero:
            raise InputError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial."""
        if self.is_zero:
            return Fraction(0)
        if self.total_degree() > 0:
            raise InputError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def _var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}", field=name) from None

    def _check_same(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise InputError(
                f"mixed ambient variables {self.variables} vs {other.variables}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.variables, as_rat(other))
        self._check_same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.variables, as_rat(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rat(other)
            if c == 0:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables,
                             {e: k * c for e, k in self.terms.items()})
        self._check_same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError("exponent must be a nonnegative integer")
        out = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    # -- calculus and evaluation ----------------------------------------------

    def partial(self, name: str) -> "MultiPoly":
        """Formal partial derivative with respect to one variable."""
        i = self._var_index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[e2] = out.get(e2, Fraction(0)) + c * e[i]
        return MultiPoly(self.variables, out)

    def substitute(self, bindings: Mapping) -> "MultiPoly":
        """Simultaneous substitution; every variable of self must be bound.

        Values may be MultiPoly (all over one common variable tuple) or exact
        scalars.  With all-scalar bindings the result is a constant polynomial
        over the original variables.
        """
        for v in self.variables:
            if v not in bindings:
                raise InputError(f"unbound variable {v!r}", field=v)
        target_vars = None
        for val in bindings.values():
            if isinstance(val, MultiPoly):
                if target_vars is None:
                    target_vars = val.variables
                elif target_vars != val.variables:
                    raise InputError("substitution images live in different rings")
        if target_vars is None:
            target_vars = self.variables
        images = {}
        for v in self.variables:
            val = bindings[v]
            if not isinstance(val, MultiPoly):
                val = MultiPoly.const(target_vars, as_rat(val))
            images[v] = val
        out = MultiPoly.zero(target_vars)
        for e, c in self.terms.items():
            term = MultiPoly.const(target_vars, c)
            for v, k in zip(self.variables, e):
                if k:
                    term = term * (images[v] ** k)
            out = out + term
        return out

    def eval_at(self, point: Sequence) -> Fraction:
        """Evaluate at a rational point (one value per variable)."""
        if len(point) != len(self.variables):
            raise InputError("point dimension does not match variable count")
        vals = [as_rat(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    # -- printing --------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = [f"{v}^{k}" if k > 1 else v
                       for v, k in zip(self.variables, e) if k]
            body = "*".join(factors)
            if not body:
                parts.append(format_rat(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{format_rat(c)}*{body}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_partial(p: MultiPoly, name: str) -> MultiPoly:
    return p.partial(name)


def poly_substitute(p: MultiPoly, bindings: Mapping) -> MultiPoly:
    return p.substitute(bindings)


# ---------------------------------------------------------------------------
# Polynomial division and gcd
# ---------------------------------------------------------------------------

def poly_divexact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact quotient p/q; raises InputError when q does not divide p."""
    p._check_same(q)
    if q.is_zero:
        raise InputError("division by the zero polynomial")
    if p.is_zero:
        return MultiPoly.zero(p.variables)
    qe, qc = q.leading()
    rem = p
    out: dict = {}
    while not rem.is_zero:
        re, rc = rem.leading()
        ee = tuple(a - b for a, b in zip(re, qe))
        if any(x < 0 for x in ee):
            raise InputError("polynomial division is not exact")
        coeff = rc / qc
        out[ee] = out.get(ee, Fraction(0)) + coeff
        rem = rem - MultiPoly.monomial(p.variables, ee, coeff) * q
    return MultiPoly(p.variables, out)


def _monic(p: MultiPoly) -> MultiPoly:
    if p.is_zero:
        return p
    _, lc = p.leading()
    return p * (Fraction(1) / lc)


def _univariate_parts(p: MultiPoly, vi: int):
    """Coefficients of p viewed as univariate in variable index vi.

    Returns a dict power -> MultiPoly (the coefficient, with variable vi
    zeroed out of its exponents).
    """
    coeffs: dict = {}
    for e, c in p.terms.items():
        k = e[vi]
        e2 = e[:vi] + (0,) + e[vi + 1:]
        bucket = coeffs.setdefault(k, {})
        bucket[e2] = bucket.get(e2, Fraction(0)) + c
    return {k: MultiPoly(p.variables, t) for k, t in coeffs.items()}


def _from_univariate_parts(variables, vi: int, parts: Mapping) -> MultiPoly:
    terms: dict = {}
    for k, coeff in parts.items():
        for e, c in coeff.terms.items():
            e2 = e[:vi] + (k,) + e[vi + 1:]
            terms[e2] = terms.get(e2, Fraction(0)) + c
    return MultiPoly(variables, terms)


def _deg_in_index(p: MultiPoly, vi: int) -> int:
    return max((e[vi] for e in p.terms), default=0)


def _content_and_primitive(p: MultiPoly, vi: int):
    parts = _univariate_parts(p, vi)
    cont = MultiPoly.zero(p.variables)
    for coeff in parts.values():
        cont = poly_gcd(cont, coeff)
    return cont, poly_divexact(p, cont)


def _pseudo_rem(a: MultiPoly, b: MultiPoly, vi: int) -> MultiPoly:
    """Pseudo-remainder of a by b in the variable with index vi."""
    db = _deg_in_index(b, vi)
    b_parts = _univariate_parts(b, vi)
    lb = b_parts[db]
    r = a
    while not r.is_zero:
        dr = _deg_in_index(r, vi)
        if dr < db:
            break
        r_parts = _univariate_parts(r, vi)
        lr = r_parts[dr]
        shift = [0] * len(a.variables)
        shift[vi] = dr - db
        xpow = MultiPoly.monomial(a.variables, tuple(shift), 1)
        r = r * lb - b * (lr * xpow)
    return r


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """GCD over Q[variables], normalized with graded-lex leading coefficient 1."""
    if isinstance(p, MultiPoly) and isinstance(q, MultiPoly):
        p._check_same(q)
    if p.is_zero:
        return _monic(q)
    if q.is_zero:
        return _monic(p)
    vi = None
    for i in range(len(p.variables)):
        if _deg_in_index(p, i) > 0 or _deg_in_index(q, i) > 0:
            vi = i
            break
    if vi is None:
        return MultiPoly.const(p.variables, 1)
    cp, pp = _content_and_primitive(p, vi)
    cq, qq = _content_and_primitive(q, vi)
    cont = poly_gcd(cp, cq)
    a, b = pp, qq
    if _deg_in_index(a, vi) < _deg_in_index(b, vi):
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b, vi)
        a = b
        if r.is_zero:
            b = r
        else:
            _, b = _content_and_primitive(r, vi)
    return _monic(cont * a)


def squarefree_decompose(p: MultiPoly):
    """Yun decomposition of a nonzero univariate polynomial.

    Returns [(factor, multiplicity), ...] with monic, pairwise-coprime,
    squarefree factors ordered by multiplicity; the product of
    factor^multiplicity equals p up to a nonzero constant.
    """
    if p.is_zero:
        raise InputError("cannot decompose the zero polynomial")
    active = [i for i in range(len(p.variables))
              if _deg_in_index(p, i) > 0]
    if len(active) > 1:
        raise InputError("squarefree decomposition requires a univariate input")
    if not active:
        return []
    name = p.variables[active[0]]
    dp = p.partial(name)
    g = poly_gcd(p, dp)
    if g.total_degree() == 0:
        return [(_monic(p), 1)]
    c = poly_divexact(p, g)
    d = poly_divexact(dp, g) - c.partial(name)
    out = []
    i = 1
    while c.total_degree() > 0:
        a = poly_gcd(c, d)
        if a.total_degree() > 0:
            out.append((a, i))
        c = poly_divexact(c, a)
        d = poly_divexact(d, a) - c.partial(name)
        i += 1
    out.sort(key=lambda fm: fm[1])
    return out


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

class RationalFunction:
    """Reduced quotient num/den of polynomials over one variable tuple.

    Canonical form: gcd(num, den) = 1 and den monic in graded-lex order, so
    equal functions compare equal componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: Optional[MultiPoly] = None):
        if den is None:
            den = MultiPoly.const(num.variables, 1)
        num._check_same(den)
        if den.is_zero:
            raise InputError("zero denominator")
        if num.is_zero:
            num = MultiPoly.zero(num.variables)
            den = MultiPoly.const(num.variables, 1)
        else:
            g = poly_gcd(num, den)
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
            _, lc = den.leading()
            num = num * (Fraction(1) / lc)
            den = den * (Fraction(1) / lc)
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __str__(self):
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Dense matrix helpers (generic over ring elements)
# ---------------------------------------------------------------------------

def mat_identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_vec(A, v):
    return [sum((A[i][j] * v[j] for j in range(len(v))),
                start=A[i][0] * 0) for i in range(len(A))]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    zero = A[0][0] * 0
    return [[sum((A[i][t] * B[t][j] for t in range(k)), start=zero)
             for j in range(m)] for i in range(n)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_pow(A, k: int):
    n = len(A)
    out = mat_identity(n)
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def mat_commutator(A, B):
    return mat_add(mat_mul(A, B), mat_scale(mat_mul(B, A), -1))


def mat_inverse(A):
    """Exact inverse of a square Fraction matrix (Gauss-Jordan)."""
    n = len(A)
    M = [[as_rat(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise InputError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = Fraction(1) / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def mat_rank(A) -> int:
    if not A:
        return 0
    return span_reduce([list(row) for row in A], ambient_dim=len(A[0])).dim


# ---------------------------------------------------------------------------
# Subspaces in canonical reduced row echelon form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n with a canonical RREF basis.

    Two subspaces are equal as sets iff their basis tuples are identical.
    """

    ambient_dim: int
    basis: tuple

    def __post_init__(self):
        last = -1
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise InputError("basis row length does not match ambient dimension")
            piv = next((j for j, x in enumerate(row) if x != 0), None)
            if piv is None:
                raise InputError("zero row in basis")
            if piv <= last:
                raise InputError("basis rows are not in echelon order")
            if row[piv] != 1:
                raise InputError("pivot entry is not 1")
            for other in self.basis:
                if other is not row and other[piv] != 0:
                    raise InputError("basis is not fully reduced")
            last = piv

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self):
        return tuple(next(j for j, x in enumerate(row) if x != 0)
                     for row in self.basis)

    def reduce(self, vec):
        """Residual of vec after eliminating the pivot coordinates.

        Works generically: vec entries may be Fractions or polynomials.
        """
        if len(vec) != self.ambient_dim:
            raise InputError("vector dimension does not match ambient")
        res = list(vec)
        for row, piv in zip(self.basis, self.pivots()):
            c = res[piv]
            if isinstance(c, MultiPoly):
                if c.is_zero:
                    continue
            elif c == 0:
                continue
            res = [r - c * as_rat(b) for r, b in zip(res, row)]
        return res

    def contains(self, vec) -> bool:
        res = self.reduce(vec)
        for x in res:
            if isinstance(x, MultiPoly):
                if not x.is_zero:
                    return False
            elif x != 0:
                return False
        return True

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(list(row)) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise InputError("ambient dimensions differ")
        return span_reduce([list(r) for r in self.basis + other.basis],
                           ambient_dim=self.ambient_dim)


def span_reduce(vectors: Iterable, ambient_dim: Optional[int] = None) -> Subspace:
    """Canonical RREF span of a family of rational vectors.

    Idempotent and independent of input order; the empty family needs an
    explicit ambient dimension.
    """
    rows = [[as_rat(x) for x in v] for v in vectors]
    if rows:
        dims = {len(r) for r in rows}
        if len(dims) != 1:
            raise InputError(f"mixed vector dimensions {sorted(dims)}")
        if ambient_dim is not None and dims != {ambient_dim}:
            raise InputError("vectors do not match the declared ambient dimension")
        ambient_dim = dims.pop()
    elif ambient_dim is None:
        raise InputError("empty family requires an explicit ambient dimension")
    n = ambient_dim
    echelon: list = []
    work = rows
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = Fraction(1) / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    basis = tuple(tuple(row) for row in work[:r])
    return Subspace(ambient_dim=n, basis=basis)


# ---------------------------------------------------------------------------
# Pluecker coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlueckerPoint:
    """Primitive integer vector of maximal minors, one per lex-ordered
    column subset; first nonzero coordinate positive, gcd 1."""

    k: int
    n: int
    coords: tuple

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise InputError("Pluecker coordinates must be nonzero")
        g = 0
        for c in self.coords:
            g = gcd(g, abs(c))
        if g != 1:
            raise InputError("Pluecker coordinates are not primitive")
        first = next(c for c in self.coords if c != 0)
        if first < 0:
            raise InputError("first nonzero Pluecker coordinate must be positive")


def _det_fraction(rows) -> Fraction:
    """Exact determinant of a square Fraction matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det * sign


def plucker(S: Subspace) -> PlueckerPoint:
    """Projective minor vector of a subspace, canonically normalized.

    Independent of the generating set because the RREF basis is canonical.
    """
    k, n = S.dim, S.ambient_dim
    if k == 0:
        raise InputError("the zero subspace has no Pluecker point")
    minors = []
    for cols in itertools.combinations(range(n), k):
        sub = [[row[c] for c in cols] for row in S.basis]
        minors.append(_det_fraction(sub))
    denom = lcm(*(m.denominator for m in minors)) if minors else 1
    ints = [int(m * denom) for m in minors]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return PlueckerPoint(k=k, n=n, coords=tuple(ints))


# ---------------------------------------------------------------------------
# Generic rank over the polynomial fraction field
# ---------------------------------------------------------------------------

def generic_rank(matrix) -> int:
    """Rank of a polynomial matrix over the fraction field.

    Fraction-free (Bareiss) elimination with lazily evaluated entries: the
    entry of row i at column j after k pivot steps is a (k+1)-minor of the
    original matrix, computed on demand so dependent columns are never
    touched.  Equals the maximum numeric rank over all rational points.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = {len(r) for r in rows}
    if len(ncols) != 1:
        raise InputError("matrix rows have mixed lengths")
    ncols = ncols.pop()
    if ncols == 0:
        return 0
    template = None
    for r in rows:
        for x in r:
            if isinstance(x, MultiPoly):
                template = x.variables
                break
        if template:
            break
    if template is None:
        template = ()
    rows = [[x if isinstance(x, MultiPoly) else MultiPoly.const(template, as_rat(x))
             for x in r] for r in rows]

    memo: dict = {}
    piv_rows: list = []   # row indices of chosen pivots
    piv_cols: list = []
    piv_vals: list = []   # pivot entries after their own reduction step

    def value(i: int, j: int, k: int) -> MultiPoly:
        if k == 0:
            return rows[i][j]
        key = (i, j, k)
        got = memo.get(key)
        if got is not None:
            return got
        pr, pc = piv_rows[k - 1], piv_cols[k - 1]
        t = value(i, j, k - 1) * piv_vals[k - 1] - value(i, pc, k - 1) * value(pr, j, k - 1)
        if k >= 2:
            t = poly_divexact(t, piv_vals[k - 2])
        memo[key] = t
        return t

    for i in range(len(rows)):
        k = len(piv_rows)
        for j in range(ncols):
            if j in piv_cols:
                continue
            v = value(i, j, k)
            if not v.is_zero:
                piv_rows.append(i)
                piv_cols.append(j)
                piv_vals.append(v)
                break
    return len(piv_rows)
