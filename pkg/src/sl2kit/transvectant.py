"""Transvections of binary forms and the exact coefficient identities they
satisfy on near-middle monomials.

The r-th transvection of forms f (degree d) and h (degree e) is

    (f,h)_r = sum_{i=0..r} (-1)^i C(r,i) d^r f/dx^(r-i)dy^i * d^r h/dx^i dy^(r-i),

a form of degree d + e - 2r.  The quadratic case (f,f)_r vanishes
identically for odd r.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import List, Sequence

from .kernel import InputError, MultiPoly, as_rat
from .sl2rep import BinaryForm


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rising(a: int, n: int) -> int:
    """Rising factorial a (a+1) ... (a+n-1); empty product is 1."""
    out = 1
    for j in range(n):
        out *= a + j
    return out


def _zero_like(scalars):
    for s in scalars:
        if isinstance(s, MultiPoly):
            return MultiPoly.zero(s.variables)
    return Fraction(0)


def _dx(coeffs: Sequence, zero) -> list:
    # d/dx on sum c_k x^k y^(m-k): index k picks up (k+1) c_{k+1}
    return [(k + 1) * coeffs[k + 1] for k in range(len(coeffs) - 1)] or [zero]


def _dy(coeffs: Sequence, zero) -> list:
    m = len(coeffs) - 1
    return [(m - k) * coeffs[k] for k in range(m)] or [zero]


def _conv(a: Sequence, b: Sequence, zero) -> list:
    out = [zero] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] = out[i + j] + u * v
    return out


def transvection_coeffs(fc: Sequence, hc: Sequence, r: int) -> list:
    """Coefficient vector of (f,h)_r from coefficient vectors.

    Generic over the coefficient ring: entries may be exact rationals or
    polynomials over one shared variable tuple.
    """
    d, e = len(fc) - 1, len(hc) - 1
    if r < 0 or r > min(d, e):
        raise InputError(f"transvection order r={r} out of range for degrees "
                         f"({d}, {e})", field="r")
    zero = _zero_like(list(fc) + list(hc))
    fc = list(fc)
    hc = list(hc)
    # r-fold mixed partials: F[i] = d^r f / dx^(r-i) dy^i, H[i] = d^r h / dx^i dy^(r-i)
    fx = [fc]
    for _ in range(r):
        fx.append(_dx(fx[-1], zero))
    F = []
    for i in range(r + 1):
        cur = fx[r - i]
        for _ in range(i):
            cur = _dy(cur, zero)
        F.append(cur)
    hx = [hc]
    for _ in range(r):
        hx.append(_dx(hx[-1], zero))
    H = []
    for i in range(r + 1):
        cur = hx[i]
        for _ in range(r - i):
            cur = _dy(cur, zero)
        H.append(cur)
    n = d + e - 2 * r
    out = [zero] * (n + 1)
    for i in range(r + 1):
        sign = -1 if i % 2 else 1
        c = sign * binom(r, i)
        prod = _conv(F[i], H[i], zero)
        for k in range(n + 1):
            out[k] = out[k] + c * prod[k]
    return out


def transvection(f: BinaryForm, h: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvection (f,h)_r; bilinear, degree d + e - 2r."""
    coeffs = transvection_coeffs(f.coeffs, h.coeffs, r)
    return BinaryForm(f.degree + h.degree - 2 * r, tuple(coeffs))


def quad_transvectant(f: BinaryForm, r: int) -> BinaryForm:
    """(f,f)_r; identically zero as a polynomial map when r is odd."""
    if r < 0 or r > f.degree:
        raise InputError(f"order r={r} out of range for degree {f.degree}",
                         field="r")
    return transvection(f, f, r)


def cmr_sum(m: int, r: int) -> Fraction:
    """Coefficient of (x^(m-1) y^(m+1), x^(m-1) y^(m+1))_r on
    x^(2m-r-2) y^(2m-r+2), as the alternating rising-factorial sum.

    Terms whose binomial index falls outside [0, r] contribute zero.
    """
    if m < 1:
        raise InputError("m must be >= 1", field="m")
    if r % 2 != 0:
        raise InputError("r must be even", field="r")
    if not 0 <= r < 2 * m:
        raise InputError("need 0 <= r < 2m", field="r")
    total = 0
    for i in range(r - m + 1, m):
        sign = -1 if i % 2 else 1
        total += (sign * binom(r, i)
                  * rising(m - r + i, r - i)
                  * rising(m - i + 2, i)
                  * rising(m - i, i)
                  * rising(m - r + i + 2, r - i))
    return Fraction(total)


def cmr_closed(m: int, s: int) -> Fraction:
    """Closed form (-1)^s (2s)! (s!)^2 C(m-1,s) C(m+1,s) C(2m-s,s) for the
    same coefficient at r = 2s."""
    if m < 1:
        raise InputError("m must be >= 1", field="m")
    if not 0 <= 2 * s < 2 * m:
        raise InputError("need 0 <= 2s < 2m", field="s")
    sign = -1 if s % 2 else 1
    return Fraction(sign * factorial(2 * s) * factorial(s) ** 2
                    * binom(m - 1, s) * binom(m + 1, s) * binom(2 * m - s, s))


def konvalinka_cmm(m: int) -> Fraction:
    """The r = m specialization ((m+1)!^2 / m^2) * sum_{i=1}^{m-1} (-1)^i
    C(m,i-1) C(m,i) C(m,i+1); zero exactly for odd m."""
    if m < 1:
        raise InputError("m must be >= 1", field="m")
    acc = 0
    for i in range(1, m):
        sign = -1 if i % 2 else 1
        acc += sign * binom(m, i - 1) * binom(m, i) * binom(m, i + 1)
    return Fraction(factorial(m + 1) ** 2, m ** 2) * acc


def symbolic_forms(*specs) -> List[list]:
    """Coefficient vectors of generic forms sharing one polynomial ring.

    Each spec is a (degree, prefix) pair; the returned vectors have entries
    MultiPoly variables named prefix0, prefix1, ...
    """
    names = []
    for d, prefix in specs:
        names.extend(f"{prefix}{i}" for i in range(d + 1))
    ring = tuple(names)
    out = []
    for d, prefix in specs:
        out.append([MultiPoly.var(ring, f"{prefix}{i}") for i in range(d + 1)])
    return out
