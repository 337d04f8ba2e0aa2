"""Vector fields from polynomial endomorphisms, exact Lie derivatives,
first-integral verification, distribution ranks, and the quotient map into
the Grassmannian of evaluated spans.

A family of vector fields D evaluates at a point v to the subspace
D(v) = span{xi(v)}; the generic dimension of that subspace governs how many
independent first integrals exist (ambient dimension minus generic rank),
and the assignment v |-> D(v) is the quotient map, fingerprinted here by
Pluecker coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .kernel import (
    InputError, MultiPoly, PlueckerPoint, RationalFunction, as_rat,
    generic_rank, plucker, span_reduce,
)


class StratumError(InputError):
    """The point lies outside the open stratum of maximal rank."""


@dataclass(frozen=True)
class VectorField:
    """sum p_i d/dx_i over an ordered coordinate tuple."""

    ambient: tuple
    components: tuple

    def __post_init__(self):
        if len(self.components) != len(self.ambient):
            raise InputError("component count must match coordinate count")
        for p in self.components:
            if not isinstance(p, MultiPoly) or p.variables != self.ambient:
                raise InputError("components must be polynomials over the "
                                 "field's coordinates")

    def at(self, point: Sequence) -> list:
        return [p.eval_at(list(point)) for p in self.components]


@dataclass(frozen=True)
class FieldFamily:
    """Finitely many vector fields over one shared ambient, treated as the
    spanning set of a linear space of fields."""

    ambient: tuple
    fields: tuple

    def __post_init__(self):
        for xi in self.fields:
            if xi.ambient != self.ambient:
                raise InputError("fields live over different ambients")


def field_from_endo(ambient: Sequence[str], components: Sequence[MultiPoly]) -> VectorField:
    """Vector field of a polynomial self-map: the components are reused
    verbatim as the coefficients of d/dx_i."""
    ambient = tuple(ambient)
    return VectorField(ambient, tuple(components))


def _as_ratfun(f, ambient) -> RationalFunction:
    if isinstance(f, RationalFunction):
        if f.num.variables != tuple(ambient):
            raise InputError("function does not live over the family's ambient")
        return f
    if isinstance(f, MultiPoly):
        if f.variables != tuple(ambient):
            raise InputError("function does not live over the family's ambient")
        return RationalFunction(f)
    raise InputError("expected a polynomial or rational function")


def lie_derivative(xi: VectorField, f) -> RationalFunction:
    """sum p_i df/dx_i, reduced; linear in both arguments and Leibniz over
    products."""
    f = _as_ratfun(f, xi.ambient)
    num, den = f.num, f.den
    dnum = MultiPoly.zero(xi.ambient)
    dden = MultiPoly.zero(xi.ambient)
    for p, v in zip(xi.components, xi.ambient):
        if not p.is_zero:
            dnum = dnum + p * num.partial(v)
            dden = dden + p * den.partial(v)
    return RationalFunction(den * dnum - num * dden, den * den)


def is_first_integral(D: FieldFamily, f) -> bool:
    """True iff every field in the family annihilates f exactly."""
    return all(lie_derivative(xi, f).is_zero for xi in D.fields)


def distribution_rank_at(D: FieldFamily, v: Sequence) -> int:
    """dim span{xi(v) : xi in D} at a rational point."""
    point = [as_rat(x) for x in v]
    if len(point) != len(D.ambient):
        raise InputError("point dimension does not match the ambient")
    vectors = [xi.at(point) for xi in D.fields]
    if not vectors:
        return 0
    return span_reduce(vectors, ambient_dim=len(D.ambient)).dim


_GENERIC_RANK_CACHE: dict = {}


def generic_distribution_rank(D: FieldFamily) -> int:
    """Maximal rank of the evaluated span, computed symbolically as the rank
    of the component matrix over the fraction field (the open-stratum
    value)."""
    key = id(D)
    got = _GENERIC_RANK_CACHE.get(key)
    if got is not None:
        return got
    rows = [list(xi.components) for xi in D.fields]
    rank = generic_rank(rows) if rows else 0
    _GENERIC_RANK_CACHE[key] = rank
    return rank


def quotient_point(D: FieldFamily, v: Sequence) -> PlueckerPoint:
    """Pluecker fingerprint of the evaluated span at a maximal-rank point."""
    point = [as_rat(x) for x in v]
    rank = distribution_rank_at(D, point)
    generic = generic_distribution_rank(D)
    if rank != generic:
        raise StratumError(
            f"rank {rank} at the point is below the generic rank {generic}")
    vectors = [xi.at(point) for xi in D.fields]
    return plucker(span_reduce(vectors, ambient_dim=len(D.ambient)))


def tdeg_first_integrals(D: FieldFamily) -> int:
    """Transcendence degree of the field of first integrals: ambient
    dimension minus the generic rank of the family."""
    return len(D.ambient) - generic_distribution_rank(D)


# ---------------------------------------------------------------------------
# Built-in families
# ---------------------------------------------------------------------------

def gl2_adjoint_family() -> FieldFamily:
    """Fields of A |-> I and A |-> A on 2x2 matrix coordinates (a, b, c, d)."""
    V = ("a", "b", "c", "d")
    one = MultiPoly.const(V, 1)
    zero = MultiPoly.zero(V)
    const_i = field_from_endo(V, (one, zero, zero, one))
    euler = field_from_endo(V, tuple(MultiPoly.var(V, v) for v in V))
    return FieldFamily(V, (const_i, euler))


def gln_adjoint_family(n: int) -> FieldFamily:
    """Fields of A |-> A^i for i = 0..n-1 on n x n matrix coordinates."""
    if not 1 <= n:
        raise InputError("need n >= 1", field="n")
    V = tuple(f"a{i}{j}" for i in range(n) for j in range(n))
    coord = [[MultiPoly.var(V, f"a{i}{j}") for j in range(n)] for i in range(n)]
    power = [[MultiPoly.const(V, int(i == j)) for j in range(n)] for i in range(n)]
    fields = []
    for _ in range(n):
        comps = tuple(power[i][j] for i in range(n) for j in range(n))
        fields.append(field_from_endo(V, comps))
        power = [[sum((power[i][t] * coord[t][j] for t in range(n)),
                      start=MultiPoly.zero(V)) for j in range(n)]
                 for i in range(n)]
    return FieldFamily(V, tuple(fields))


def u3_family() -> FieldFamily:
    """Fields of the identity and of the constant map to (0, 1, 0) on
    coordinates (x, y, z)."""
    V = ("x", "y", "z")
    ident = field_from_endo(V, tuple(MultiPoly.var(V, v) for v in V))
    const = field_from_endo(
        V, (MultiPoly.zero(V), MultiPoly.const(V, 1), MultiPoly.zero(V)))
    return FieldFamily(V, (ident, const))


def builtin_families(name: str, n: Optional[int] = None) -> FieldFamily:
    if name == "gl2_adjoint":
        return gl2_adjoint_family()
    if name == "gln_adjoint":
        if n is None:
            raise InputError("gln_adjoint needs the size n", field="n")
        return gln_adjoint_family(n)
    if name == "u3":
        return u3_family()
    raise InputError(f"unknown family {name!r}", field="name")
