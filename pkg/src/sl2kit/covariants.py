"""Composable equivariant polynomial maps on binary forms.

A covariant here is a homogeneous polynomial map from V_d into some
representation space, built as a small composition tree whose leaves are
known-equivariant constructions: the identity, quadratic transvectants,
highest-weight embeddings, the Lie-algebra action map into End(V_d), the
tensor-to-endomorphism contraction, and the matrix-power family
Phi_s(phi, psi): f |-> phi(f)^s psi(f).

Every covariant evaluates generically, so the same tree runs on exact
rational coefficient vectors and on symbolic ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .kernel import InputError, MultiPoly, mat_vec
from .sl2rep import (
    BinaryForm, RepSpace, Subspace, extend_from_highest_weight, make_rep,
    subspace_vplus, subspace_vplusplus,
)
from .transvectant import transvection_coeffs


def _is_zero_scalar(x) -> bool:
    return x.is_zero if isinstance(x, MultiPoly) else x == 0


# ---------------------------------------------------------------------------
# Composition-tree nodes
# ---------------------------------------------------------------------------

class Identity:
    def __init__(self, d: int):
        self.d = d

    def evaluate(self, coeffs):
        return list(coeffs)

    def describe(self) -> str:
        return "id"


class Tau:
    """f |-> (f, f)_r, the quadratic transvectant of even order r."""

    def __init__(self, d: int, r: int):
        self.d = d
        self.r = r

    def evaluate(self, coeffs):
        return transvection_coeffs(coeffs, coeffs, self.r)

    def describe(self) -> str:
        return f"tau_{self.r}"


class LinMap:
    """A fixed equivariant linear map applied after another node."""

    def __init__(self, label: str, matrix, inner):
        self.label = label
        self.matrix = [list(row) for row in matrix]
        self.inner = inner

    def evaluate(self, coeffs):
        return mat_vec(self.matrix, self.inner.evaluate(coeffs))

    def describe(self) -> str:
        return f"{self.label}({self.inner.describe()})"


class PairTransvection:
    """f |-> ((f,f)_{r1}, (f,f)_{r2})_1, the quartic construction used when
    no quadratic endomorphism covariant exists."""

    def __init__(self, d: int, r1: int, r2: int):
        self.d = d
        self.r1 = r1
        self.r2 = r2

    def evaluate(self, coeffs):
        t1 = transvection_coeffs(coeffs, coeffs, self.r1)
        t2 = transvection_coeffs(coeffs, coeffs, self.r2)
        return transvection_coeffs(t1, t2, 1)

    def describe(self) -> str:
        return f"t1(tau_{self.r1}, tau_{self.r2})"


class PowerApply:
    """f |-> M(f)^s v(f) where M(f) is an endomorphism-valued node (flattened
    row-major) and v(f) a vector-valued node."""

    def __init__(self, s: int, phi, psi, n: int):
        self.s = s
        self.phi = phi
        self.psi = psi
        self.n = n

    def evaluate(self, coeffs):
        vec = self.psi.evaluate(coeffs)
        if self.s == 0:
            return vec
        flat = self.phi.evaluate(coeffs)
        n = self.n
        mat = [flat[i * n:(i + 1) * n] for i in range(n)]
        for _ in range(self.s):
            vec = mat_vec(mat, vec)
        return vec

    def describe(self) -> str:
        return f"phis[s={self.s}]({self.phi.describe()}, {self.psi.describe()})"


class SymbolicBody:
    """Evaluation by substituting into explicit symbolic entries."""

    def __init__(self, d: int, entries: Sequence[MultiPoly]):
        self.d = d
        self.entries = list(entries)

    def evaluate(self, coeffs):
        avars = self.entries[0].variables
        if any(isinstance(c, MultiPoly) for c in coeffs):
            ring = next(c.variables for c in coeffs if isinstance(c, MultiPoly))
            bindings = {v: (c if isinstance(c, MultiPoly)
                            else MultiPoly.const(ring, c))
                        for v, c in zip(avars, coeffs)}
            return [e.substitute(bindings) for e in self.entries]
        return [e.eval_at(list(coeffs)) for e in self.entries]

    def describe(self) -> str:
        return "symbolic-entries"


# ---------------------------------------------------------------------------
# Covariant
# ---------------------------------------------------------------------------

SYMBOLIC_HOMOGENEITY_CAP = 4


class Covariant:
    """Homogeneous equivariant map V_d -> target, evaluated through its
    composition tree; symbolic entries are materialized on demand for
    homogeneity up to SYMBOLIC_HOMOGENEITY_CAP."""

    def __init__(self, name: str, source_degree: int, target: RepSpace,
                 homogeneity: int, body, symbolic_entries=None):
        self.name = name
        self.source_degree = source_degree
        self.target = target
        self.homogeneity = homogeneity
        self.body = body
        self._symbolic = list(symbolic_entries) if symbolic_entries else None

    def evaluate(self, coeffs):
        if len(coeffs) != self.source_degree + 1:
            raise InputError(
                f"covariant {self.name} expects degree {self.source_degree}")
        return self.body.evaluate(coeffs)

    def apply_form(self, f: BinaryForm) -> BinaryForm:
        if self.target.kind != "V":
            raise InputError(f"covariant {self.name} is not form-valued")
        return BinaryForm(self.target.d, tuple(self.evaluate(f.coeffs)))

    def coefficient_variables(self):
        return tuple(f"a{i}" for i in range(self.source_degree + 1))

    def symbolic_entries(self) -> Optional[List[MultiPoly]]:
        """Entries as polynomials in the source coefficients a0..ad, or None
        when the homogeneity exceeds the symbolic cap."""
        if self._symbolic is not None:
            return self._symbolic
        if self.homogeneity > SYMBOLIC_HOMOGENEITY_CAP:
            return None
        ring = self.coefficient_variables()
        generic = [MultiPoly.var(ring, v) for v in ring]
        self._symbolic = self.evaluate(generic)
        return self._symbolic

    def describe(self) -> str:
        return self.body.describe()

    def __repr__(self):
        return f"Covariant({self.name}: V_{self.source_degree} -> " \
               f"{self.target.kind}, deg {self.homogeneity})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def cov_identity(d: int) -> Covariant:
    if d < 0:
        raise InputError("degree must be nonnegative")
    return Covariant("id", d, make_rep("V", d), 1, Identity(d))


def cov_tau(d: int, r: int) -> Covariant:
    """The quadratic transvectant covariant f |-> (f,f)_r for even r."""
    if not 0 <= r <= d:
        raise InputError(f"r={r} out of range for degree {d}", field="r")
    if r % 2 != 0:
        raise InputError("odd-order quadratic transvectants vanish identically",
                         field="r")
    return Covariant(f"tau(d={d},r={r})", d, make_rep("V", 2 * d - 2 * r), 2,
                     Tau(d, r))


def _hw_embed_v2_to_adj():
    src = make_rep("V", 2)
    tgt = make_rep("SL2ADJ")
    return extend_from_highest_weight(src, [1, 0, 0], tgt, [1, 0, 0])


def _hw_embed_v4_to_tensor():
    src = make_rep("V", 4)
    tgt = make_rep("SL2TENSOR")
    hw = [Fraction(0)] * 9
    hw[0] = Fraction(1)   # e (x) e
    return extend_from_highest_weight(src, [1, 0, 0, 0, 0], tgt, hw)


def cov_phi0_odd(d: int) -> Covariant:
    """Quadratic covariant V_d -> sl2 for odd d >= 3: the top transvectant
    followed by the highest-weight identification of V_2 with sl2."""
    if d % 2 == 0 or d < 3:
        raise InputError("needs odd d >= 3", field="d")
    m = (d - 1) // 2
    body = LinMap("hw[V2~sl2]", _hw_embed_v2_to_adj(), Tau(d, 2 * m))
    return Covariant(f"phi0(d={d})", d, make_rep("SL2ADJ"), 2, body)


def cov_phi0_even(d: int) -> Covariant:
    """Quadratic covariant V_d -> sl2 (x) sl2 for even d >= 4: the
    next-to-top transvectant into V_4, then the highest-weight embedding."""
    if d % 2 != 0 or d < 4:
        raise InputError("needs even d >= 4", field="d")
    m = d // 2
    body = LinMap("hw[V4>sl2xsl2]", _hw_embed_v4_to_tensor(), Tau(d, 2 * m - 2))
    return Covariant(f"phi0(d={d})", d, make_rep("SL2TENSOR"), 2, body)


def ad_into_end_matrix(d: int):
    """Matrix of the action map sl2 -> End(V_d), basis (e, h, f) to flattened
    endomorphisms (row-major)."""
    V = make_rep("V", d)
    n = d + 1
    cols = []
    for mat in (V.act_e, V.act_h, V.act_f):
        cols.append([mat[i][j] for i in range(n) for j in range(n)])
    return [[cols[k][idx] for k in range(3)] for idx in range(n * n)]


def cov_alpha(d: int):
    """Matrix of the contraction sl2 (x) sl2 -> End(V_d) sending A (x) B to
    the composite action rho(A) rho(B); linear and equivariant."""
    if d < 1:
        raise InputError("needs d >= 1", field="d")
    V = make_rep("V", d)
    n = d + 1
    acts = [[list(r) for r in m] for m in (V.act_e, V.act_h, V.act_f)]
    cols = []
    for i in range(3):
        for j in range(3):
            prod = [[sum(acts[i][a][t] * acts[j][t][b] for t in range(n))
                     for b in range(n)] for a in range(n)]
            cols.append([prod[a][b] for a in range(n) for b in range(n)])
    return [[cols[c][idx] for c in range(9)] for idx in range(n * n)]


def cov_phi_into_end(d: int) -> Covariant:
    """The endomorphism-valued quadratic covariant used by the orbit-span
    families: ad composed with phi0 for odd d, alpha composed with phi0 for
    even d."""
    if d % 2:
        inner = cov_phi0_odd(d)
        body = LinMap("ad", ad_into_end_matrix(d), inner.body)
    else:
        inner = cov_phi0_even(d)
        body = LinMap("alpha", cov_alpha(d), inner.body)
    return Covariant(f"phi(d={d})", d, make_rep("END", d), 2, body)


def cov_psi(d: int) -> Covariant:
    """Endomorphism covariant V_d -> V_d used to reach the weights the
    iterated raising action misses.

    For d = 0 mod 4 this is the quadratic (f,f)_{d/2}; for d = 2 mod 4 and
    d >= 10 it is the quartic pairing of two even transvectants (orders
    depending on the parity of k where d = 4k + 2).  The internal
    transvectant factors are checked nonzero at construction.
    """
    if d % 2 != 0:
        raise InputError("needs even d", field="d")
    m = d // 2
    if m % 2 == 0:
        if d < 4:
            raise InputError("needs d >= 4", field="d")
        cov = cov_tau(d, m)
        cov.name = f"psi(d={d})"
        return cov
    if d < 10:
        raise InputError("no quadratic endomorphism covariant exists here and "
                         "the quartic construction needs d >= 10", field="d")
    k = (m - 1) // 2
    if k % 2 == 0:
        r1, r2 = 3 * k, 3 * k + 2
    else:
        r1, r2 = 3 * k - 1, 3 * k + 3
    cov = Covariant(f"psi(d={d})", d, make_rep("V", d), 4,
                    PairTransvection(d, r1, r2))
    # degenerate cancellation must surface as an error, not silence
    probe = BinaryForm.monomial(d, m - 1)
    from .transvectant import quad_transvectant, transvection
    f1 = quad_transvectant(probe, r1)
    f2 = quad_transvectant(probe, r2)
    if f1.is_zero or f2.is_zero or transvection(f1, f2, 1).is_zero:
        raise InputError(f"internal transvectant factor vanished for d={d}")
    return cov


def cov_phis(phi_end: Covariant, psi: Covariant, s: int) -> Covariant:
    """Phi_s(phi, psi): f |-> phi(f)^s psi(f), homogeneity
    s*deg(phi) + deg(psi)."""
    if s < 0:
        raise InputError("s must be nonnegative", field="s")
    if phi_end.source_degree != psi.source_degree:
        raise InputError("source degrees differ")
    if phi_end.target.kind != "END":
        raise InputError("phi must be endomorphism-valued")
    n = phi_end.target.d + 1
    if psi.target.dim != n:
        raise InputError("psi target does not match the endomorphism space")
    hom = s * phi_end.homogeneity + psi.homogeneity
    body = PowerApply(s, phi_end.body, psi.body, n)
    return Covariant(f"phis(s={s};{phi_end.name},{psi.name})",
                     phi_end.source_degree, psi.target, hom, body)


def from_symbolic_entries(name: str, d: int, target: RepSpace,
                          homogeneity: int, entries) -> Covariant:
    """Covariant defined directly by symbolic entries in a0..ad (used for
    controls and externally supplied maps)."""
    return Covariant(name, d, target, homogeneity,
                     SymbolicBody(d, entries), symbolic_entries=entries)


# ---------------------------------------------------------------------------
# Equivariance checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivarianceReport:
    passed: bool
    method: str                      # "symbolic" or "by-construction"
    witness: Optional[tuple] = None  # (generator, component, residual)
    certificate: Optional[str] = None

    def __bool__(self):
        return self.passed


def check_equivariance(c: Covariant) -> EquivarianceReport:
    """Verify the infinitesimal equivariance of a covariant exactly.

    For each generator A in {e, h, f} the identity
        rho_target(A) c(f) = sum_i dc/da_i (f) * (rho_source(A) f)_i
    must hold as polynomials in the symbolic coefficients a0..ad.  When
    symbolic entries are unavailable (high homogeneity) the covariant is
    equivariant by construction and the tree certificate is returned.
    """
    entries = c.symbolic_entries()
    if entries is None:
        return EquivarianceReport(True, "by-construction",
                                  certificate=c.describe())
    src = make_rep("V", c.source_degree)
    tgt = c.target
    ring = c.coefficient_variables()
    avars = [MultiPoly.var(ring, v) for v in ring]
    partials = [[e.partial(v) for v in ring] for e in entries]
    for gen_name, As, At in (("e", src.act_e, tgt.act_e),
                             ("h", src.act_h, tgt.act_h),
                             ("f", src.act_f, tgt.act_f)):
        action_on_coeffs = mat_vec([list(r) for r in As], avars)
        for j in range(tgt.dim):
            lhs = MultiPoly.zero(ring)
            for k in range(tgt.dim):
                if At[j][k] != 0:
                    lhs = lhs + At[j][k] * entries[k]
            rhs = MultiPoly.zero(ring)
            for i in range(src.dim):
                if not partials[j][i].is_zero:
                    rhs = rhs + partials[j][i] * action_on_coeffs[i]
            residual = lhs - rhs
            if not residual.is_zero:
                return EquivarianceReport(False, "symbolic",
                                          witness=(gen_name, j, str(residual)))
    return EquivarianceReport(True, "symbolic")


# ---------------------------------------------------------------------------
# The orbit-span families used by the minimal-subspace certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremFamily:
    d: int
    family: tuple           # covariants V_d -> V_d
    point: BinaryForm        # the weight vector whose orbit span is computed
    subspace: Subspace       # expected span
    expected_dim: int        # dimension of the expected span
    stated_dim: int          # dimension value stated alongside the original
                             # result (differs from expected_dim for odd d)


def theorem_family(d: int) -> TheoremFamily:
    """Covariant family, base point, and expected minimal symmetric subspace
    for degree d.

    Odd d: Phi_s(phi, id) for s = 0..m lands in each positive weight in turn,
    and the expected span is the full positive-weight space (dimension m+1;
    the classically stated value m is recorded for the report).  d = 0 mod 4:
    the families Phi_s(phi, id) and Phi_s(phi, psi) cover all positive
    weights, dimension m.  d = 2 mod 4, d >= 10: same shape with the quartic
    psi; weight 4 is unreachable and the span has dimension m - 1.
    """
    if d % 2 == 1:
        if d < 3:
            raise InputError("needs d >= 3", field="d")
        m = (d - 1) // 2
        phi = cov_phi_into_end(d)
        ident = cov_identity(d)
        fam = tuple(cov_phis(phi, ident, s) for s in range(m + 1))
        point = BinaryForm.monomial(d, m)
        return TheoremFamily(d, fam, point, subspace_vplus(d), m + 1, m)
    m = d // 2
    phi = cov_phi_into_end(d)
    ident = cov_identity(d)
    psi = cov_psi(d)
    fam = [cov_phis(phi, ident, s) for s in range(0, (d - 2) // 4 + 1)]
    if m % 2 == 0:
        if d < 4:
            raise InputError("needs d >= 4", field="d")
        fam += [cov_phis(phi, psi, s) for s in range(0, (d - 4) // 4 + 1)]
        W = subspace_vplus(d)
        dim = m
    else:
        if d < 10:
            raise InputError("needs d >= 10 when d = 2 mod 4", field="d")
        fam += [cov_phis(phi, psi, s) for s in range(0, (d - 8) // 4 + 1)]
        W = subspace_vplusplus(d)
        dim = m - 1
    point = BinaryForm.monomial(d, m - 1)
    return TheoremFamily(d, tuple(fam), point, W, dim, dim)
