"""Orbit spans of covariant families, nullform detection, subspace-stability
certificates, and the matrix-space examples.

For a family of endomorphism covariants F and a point v, the span of
{c(v) : c in F} is a linear subspace contained in the full orbit span of v;
together with a stability certificate for a candidate subspace W it pins W
down exactly.  Nullforms are detected through linear-factor multiplicities,
which are insensitive to field extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .kernel import (
    InputError, MultiPoly, Subspace, as_rat, mat_identity, mat_mul, mat_rank,
    span_reduce, squarefree_decompose,
)
from .sl2rep import BinaryForm
from .covariants import Covariant, _is_zero_scalar


@dataclass(frozen=True)
class SpanReport:
    """Span of a covariant family at a point.

    ``saturated`` records whether the last expansion round added no new
    independent direction; ``matches_candidate`` compares against an optional
    expected subspace.
    """

    point: tuple
    family: tuple
    span: Subspace
    saturated: bool
    matches_candidate: Optional[bool] = None

    @property
    def contains_point(self) -> bool:
        return self.span.dim > 0 and self.span.contains(list(self.point))


@dataclass(frozen=True)
class NullformReport:
    is_null: bool
    max_multiplicity: int
    y_multiplicity: int


@dataclass(frozen=True)
class PolyMap:
    """Polynomial self-map of Q^n given by one component per coordinate."""

    variables: tuple
    components: tuple

    def __post_init__(self):
        if len(self.components) != len(self.variables):
            raise InputError("component count must match coordinate count")
        for p in self.components:
            if p.variables != self.variables:
                raise InputError("components must live over the map's coordinates")

    def apply(self, point: Sequence) -> list:
        return [p.eval_at(list(point)) for p in self.components]


def _as_endo(gen, ambient: int) -> Callable:
    """Adapt a generator (Covariant, PolyMap, or callable) to a vector map."""
    if isinstance(gen, Covariant):
        if gen.target.dim != ambient or gen.source_degree + 1 != ambient:
            raise InputError(f"covariant {gen.name} is not an endomorphism of "
                             f"a {ambient}-dimensional space")
        return lambda v: [as_rat(x) for x in gen.evaluate(v)]
    if isinstance(gen, PolyMap):
        if len(gen.components) != ambient:
            raise InputError("polynomial map dimension mismatch")
        return gen.apply
    if callable(gen):
        return gen
    raise InputError(f"cannot interpret {type(gen).__name__} as an endomorphism")


def _gen_name(gen) -> str:
    if isinstance(gen, Covariant):
        return gen.name
    if isinstance(gen, PolyMap):
        return "polymap(" + ", ".join(str(p) for p in gen.components) + ")"
    return getattr(gen, "__name__", repr(gen))


def family_span(F: Sequence[Covariant], v, candidate: Optional[Subspace] = None) -> SpanReport:
    """Span of the family values {c(v) : c in F}.

    All covariants must be endomorphisms of one V_d.  The report is flagged
    saturated when re-applying the family to the computed values adds no new
    direction.
    """
    if not F:
        raise InputError("empty covariant family")
    coeffs = tuple(v.coeffs) if isinstance(v, BinaryForm) else tuple(as_rat(x) for x in v)
    ambient = len(coeffs)
    degs = {c.source_degree for c in F}
    if len(degs) != 1 or degs.pop() != ambient - 1:
        raise InputError("family members must share the point's source degree")
    for c in F:
        if c.target.kind != "V" or c.target.dim != ambient:
            raise InputError(f"covariant {c.name} is not an endomorphism of V_d")
    values = [[as_rat(x) for x in c.evaluate(coeffs)] for c in F]
    span = span_reduce(values, ambient_dim=ambient)
    saturated = True
    for val in values:
        for c in F:
            again = [as_rat(x) for x in c.evaluate(val)]
            if not span.contains(again):
                saturated = False
                break
        if not saturated:
            break
    matches = None if candidate is None else (span == candidate)
    return SpanReport(point=coeffs, family=tuple(c.name for c in F),
                      span=span, saturated=saturated, matches_candidate=matches)


def orbit_closure(F: Sequence, v, depth_cap: int,
                  candidate: Optional[Subspace] = None) -> SpanReport:
    """Span of all points reachable from v by at most depth_cap generator
    applications (compositions applied to points, not to span elements).

    The result is always contained in the full orbit span; ``saturated``
    is True exactly when the final round added no independent point.
    """
    if depth_cap < 1:
        raise InputError("depth_cap must be >= 1", field="depth_cap")
    point = tuple(v.coeffs) if isinstance(v, BinaryForm) else tuple(as_rat(x) for x in v)
    ambient = len(point)
    gens = [_as_endo(g, ambient) for g in F]
    names = tuple(_gen_name(g) for g in F)
    seen = {point}
    frontier = [list(point)]
    vectors = [list(point)]
    span = span_reduce(vectors, ambient_dim=ambient)
    saturated = True
    for _ in range(depth_cap):
        new_frontier = []
        round_added_independent = False
        for p in frontier:
            for g in gens:
                q = [as_rat(x) for x in g(p)]
                key = tuple(q)
                if key in seen:
                    continue
                seen.add(key)
                new_frontier.append(q)
                if not span.contains(q):
                    span = span.sum(span_reduce([q], ambient_dim=ambient))
                    round_added_independent = True
        saturated = not round_added_independent
        frontier = new_frontier
        if not frontier:
            saturated = True
            break
    matches = None if candidate is None else (span == candidate)
    return SpanReport(point=point, family=names, span=span,
                      saturated=saturated, matches_candidate=matches)


def is_nullform(f: BinaryForm) -> NullformReport:
    """Detect whether a form has a linear factor of multiplicity > d/2.

    The factor y (the root at infinity) is read off the coefficient vector;
    finite roots are handled by the squarefree decomposition of f(t, 1),
    whose multiplicities are unchanged under field extension.  The zero form
    counts as null with multiplicity d.
    """
    d = f.degree
    if f.is_zero:
        return NullformReport(is_null=True, max_multiplicity=d, y_multiplicity=d)
    p = f.dehomogenize()
    y_mult = d - p.total_degree()
    max_finite = 0
    for factor, mult in squarefree_decompose(p):
        if factor.total_degree() >= 1:
            max_finite = max(max_finite, mult)
    max_mult = max(y_mult, max_finite)
    return NullformReport(is_null=2 * max_mult > d,
                          max_multiplicity=max_mult,
                          y_multiplicity=y_mult)


def stabilizes_subspace(c, W: Subspace) -> bool:
    """Exact check that a covariant maps W into itself.

    Evaluates on the generic element sum t_j w_j with fresh symbolic
    parameters and reduces each component against W's canonical basis; the
    check passes iff every residual is the zero polynomial.
    """
    dim = W.dim
    if dim == 0:
        return True
    ring = tuple(f"t{j + 1}" for j in range(dim))
    params = [MultiPoly.var(ring, t) for t in ring]
    generic = [MultiPoly.zero(ring) for _ in range(W.ambient_dim)]
    for t, row in zip(params, W.basis):
        for i, x in enumerate(row):
            if x != 0:
                generic[i] = generic[i] + t * x
    image = c.evaluate(generic)
    if len(image) != W.ambient_dim:
        raise InputError("covariant image does not live in the ambient space")
    residual = W.reduce(image)
    return all(_is_zero_scalar(x) for x in residual)


@dataclass(frozen=True)
class MinimalSymmetricCertificate:
    """Desk-scale certificate for a minimal symmetric subspace: the family
    span at the point equals W, every family member stabilizes W, and the
    point lies in W."""

    span_matches: bool
    all_stabilize: bool
    point_in_subspace: bool
    computed_dim: int
    expected_dim: int
    span_report: SpanReport
    failing_members: tuple = ()

    @property
    def passed(self) -> bool:
        return self.span_matches and self.all_stabilize and self.point_in_subspace


def certify_minimal_symmetric(F: Sequence[Covariant], v, W: Subspace) -> MinimalSymmetricCertificate:
    coeffs = list(v.coeffs) if isinstance(v, BinaryForm) else [as_rat(x) for x in v]
    if not W.contains(coeffs):
        raise InputError("the base point must lie in the candidate subspace")
    report = family_span(F, v, candidate=W)
    failing = tuple(c.name for c in F if not stabilizes_subspace(c, W))
    return MinimalSymmetricCertificate(
        span_matches=bool(report.matches_candidate),
        all_stabilize=not failing,
        point_in_subspace=True,
        computed_dim=report.span.dim,
        expected_dim=W.dim,
        span_report=report,
        failing_members=failing,
    )


# ---------------------------------------------------------------------------
# Matrix-space examples
# ---------------------------------------------------------------------------

def _flatten(mat) -> list:
    return [as_rat(x) for row in mat for x in row]


def matrix_power_span(A) -> Subspace:
    """Span of I, A, ..., A^(n-1) inside the n^2-dimensional matrix space."""
    n = len(A)
    if n < 1 or any(len(row) != n for row in A):
        raise InputError("need a square matrix of size >= 1")
    A = [[as_rat(x) for x in row] for row in A]
    powers = [mat_identity(n)]
    for _ in range(n - 1):
        powers.append(mat_mul(powers[-1], A))
    return span_reduce([_flatten(P) for P in powers], ambient_dim=n * n)


def is_regular_matrix(A) -> bool:
    """True when the powers I, A, ..., A^(n-1) are linearly independent."""
    n = len(A)
    return matrix_power_span(A).dim == n


def rank_profile_equal(N, N2) -> bool:
    """Whether two nilpotent matrices have identical rank profiles
    rank(N^j), j = 1..n-1 (equivalently, identical Jordan type)."""
    n = len(N)
    if len(N2) != n:
        raise InputError("matrices must have equal size")
    mats = []
    for M in (N, N2):
        M = [[as_rat(x) for x in row] for row in M]
        if any(len(row) != n for row in M):
            raise InputError("need square matrices")
        if any(x != 0 for row in mat_pow_n(M, n) for x in row):
            raise InputError("input is not nilpotent")
        mats.append(M)
    N, N2 = mats
    a, b = mat_identity(n), mat_identity(n)
    for _ in range(1, n):
        a = mat_mul(a, N)
        b = mat_mul(b, N2)
        if mat_rank(a) != mat_rank(b):
            return False
    return True


def mat_pow_n(M, k: int):
    out = mat_identity(len(M))
    for _ in range(k):
        out = mat_mul(out, M)
    return out
