"""Certified real-root structure of binary forms and univariate polynomials.

Univariate polynomials are descending coefficient lists (``p[0]`` is the
leading coefficient), exact rationals throughout. Internally Sturm sequences
are built over the integers from primitive pseudo-remainders whose scale
factors are kept positive, so every sign the theorem relies on is preserved.

Projective roots of a form are handled by bookkeeping on the point at
infinity: the affine chart ``y = 1`` plus the multiplicity of ``(1:0)``
returned by :func:`~realforms.forms.dehomogenize`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional

from . import linalg
from .errors import DegreeError, NotSquarefreeError, ZeroFormError
from .forms import BinaryForm, change_coordinates, dehomogenize, partial_x, partial_y

# ---------------------------------------------------------------------------
# univariate helpers


def _strip(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def _is_zero(p):
    return all(c == 0 for c in p)


def primitive_int(p):
    """Integer polynomial with the same roots; content 1, positive leading coefficient."""
    p = _strip(list(p))  # ints or Fractions
    den = reduce(math.lcm, (c.denominator for c in p), 1)
    q = [c.numerator * (den // c.denominator) for c in p]
    g = reduce(math.gcd, q, 0)
    if g == 0:
        return [0]
    if q[0] < 0:
        g = -g
    return [c // g for c in q]


def derivative(p):
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def _prem(a, b):
    """Remainder of ``|lc(b)|^(deg a - deg b + 1) * a`` by ``b`` over the integers."""
    a = list(a)
    db = len(b) - 1
    lc = b[0]
    delta = len(a) - 1 - db
    if delta < 0:
        return a
    for _ in range(delta + 1):
        if len(a) - 1 < db:
            a = [c * lc for c in a]
            continue
        q = a[0]
        a = [c * lc - q * (b[i] if i < len(b) else 0) for i, c in enumerate(a)][1:]
        if not a:
            a = [0]
    if lc < 0 and (delta + 1) % 2 == 1:
        a = [-c for c in a]
    return _strip(a)


def _positive_primitive(p):
    g = reduce(math.gcd, p, 0)
    if g == 0:
        return [0]
    return [c // g for c in p]


def poly_divmod(a, b):
    """Exact division over the rationals: returns ``(q, r)`` with ``a = q*b + r``."""
    a = [Fraction(c) for c in _strip(a)]
    b = [Fraction(c) for c in _strip(b)]
    if _is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    r = list(a)
    for i in range(len(q)):
        c = r[i] / b[0]
        q[i] = c
        if c:
            for j in range(len(b)):
                r[i + j] -= c * b[j]
    rem = _strip(r[len(q):]) if len(r) > len(q) else [Fraction(0)]
    return q, rem


def poly_gcd(a, b):
    """Monic gcd over the rationals (Euclid on primitive integer representatives)."""
    a, b = primitive_int(a), primitive_int(b)
    while not _is_zero(b):
        r = _prem(a, b)
        a, b = b, (primitive_int(r) if not _is_zero(r) else [0])
    lc = Fraction(a[0])
    return [Fraction(c) / lc for c in a]


def squarefree_part(p):
    """``p / gcd(p, p')`` as a primitive integer polynomial."""
    p = primitive_int(p)
    if len(p) <= 2:
        return p
    g = poly_gcd(p, derivative(p))
    if len(g) == 1:
        return p
    q, _ = poly_divmod(p, g)
    return primitive_int(q)


def poly_eval(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def _sign(v):
    return (v > 0) - (v < 0)


def sign_at(p, x) -> int:
    """Sign of ``p`` at rational ``x``, evaluating ``den^d * p(num/den)`` by homogeneous Horner.

    Integer arithmetic only when ``p`` has integer coefficients.
    """
    if isinstance(x, int):
        return _sign(poly_eval(p, x))
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in p:
        acc = acc * num + c * dpow
        dpow *= den
    return _sign(acc)


# ---------------------------------------------------------------------------
# Sturm sequences


@dataclass(frozen=True)
class SturmSequence:
    """Signed remainder sequence ``p, p', -rem(p, p'), ...`` (positive multiples only)."""

    polys: tuple

    @property
    def is_squarefree(self) -> bool:
        return len(self.polys[-1]) == 1

    def variations(self, x) -> int:
        """Sign variations at ``x``; ``x`` may be ``-math.inf`` or ``math.inf``."""
        signs = []
        for p in self.polys:
            if x == math.inf:
                s = _sign(p[0])
            elif x == -math.inf:
                s = _sign(p[0]) * (-1 if (len(p) - 1) % 2 else 1)
            else:
                s = sign_at(p, x)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_sequence(p) -> SturmSequence:
    """Sturm sequence of ``p`` itself (no square-free reduction)."""
    p = primitive_int(p)
    if _is_zero(p):
        raise ZeroFormError("Sturm sequence of the zero polynomial")
    seq = [p]
    if len(p) > 1:
        seq.append(_positive_primitive(derivative(p)))
        while len(seq[-1]) > 1:
            r = _prem(seq[-2], seq[-1])
            if _is_zero(r):
                break
            seq.append(_positive_primitive([-c for c in r]))
    return SturmSequence(tuple(tuple(q) for q in seq))


def _as_bound(v, default):
    if v is None:
        return default
    if isinstance(v, float) and math.isinf(v):
        return v
    return Fraction(v)


def sturm_count(p, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``; ``None`` means unbounded."""
    if _is_zero(p):
        raise ZeroFormError("root count of the zero polynomial")
    lo = _as_bound(lo, -math.inf)
    hi = _as_bound(hi, math.inf)
    if lo >= hi:
        return 0
    seq = sturm_sequence(squarefree_part(p))
    return seq.variations(lo) - seq.variations(hi)


def cauchy_bound(p) -> Fraction:
    """All real roots lie strictly inside ``(-B, B)``."""
    p = [Fraction(c) for c in _strip(p)]
    lc = abs(p[0])
    return 1 + max((abs(c) / lc for c in p[1:]), default=Fraction(0))


# ---------------------------------------------------------------------------
# resultants and discriminants


def sylvester_matrix(p, q, deg_p=None, deg_q=None):
    """Sylvester matrix with formal degrees (leading zeros allowed)."""
    deg_p = len(p) - 1 if deg_p is None else deg_p
    deg_q = len(q) - 1 if deg_q is None else deg_q
    p = [0] * (deg_p + 1 - len(p)) + list(p)
    q = [0] * (deg_q + 1 - len(q)) + list(q)
    size = deg_p + deg_q
    rows = []
    for i in range(deg_q):
        rows.append([0] * i + p + [0] * (size - deg_p - 1 - i))
    for i in range(deg_p):
        rows.append([0] * i + q + [0] * (size - deg_q - 1 - i))
    return rows


def resultant(p, q, deg_p=None, deg_q=None) -> Fraction:
    if (deg_p if deg_p is not None else len(p) - 1) + (deg_q if deg_q is not None else len(q) - 1) == 0:
        return Fraction(1)
    return linalg.det(sylvester_matrix(p, q, deg_p, deg_q))


def resultant_forms(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Homogeneous resultant of two binary forms (Sylvester with formal degrees)."""
    return resultant(list(f.coeffs), list(g.coeffs), f.degree, g.degree)


def resultant_gradient(f: BinaryForm) -> Fraction:
    """``Res(f_x, f_y)``; zero exactly when ``f`` has a repeated complex root."""
    if f.degree < 2:
        raise DegreeError("resultant_gradient needs degree >= 2")
    return resultant_forms(partial_x(f), partial_y(f))


def discriminant_univariate(p) -> Fraction:
    """``(-1)^(d(d-1)/2) Res(p, p') / lc(p)``, so a quadratic gives ``b^2 - 4ac``."""
    p = [Fraction(c) for c in p]
    if not p or p[0] == 0:
        raise DegreeError("discriminant needs a nonzero leading coefficient")
    d = len(p) - 1
    if d < 1:
        raise DegreeError("discriminant of a constant polynomial")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, derivative(p)) / p[0]


def discriminant_form(f: BinaryForm) -> Fraction:
    """Discriminant of a binary form, invariant under unimodular coordinate changes.

    When ``(1:0)`` is a root, the form is first moved by ``y -> y + t*x``
    (determinant 1) so that its leading coefficient ``f(1, t)`` is nonzero.
    """
    f.require_nonzero()
    if f.degree < 1:
        raise DegreeError("discriminant of a constant form")
    t = 0
    g = f
    while g.coeffs[0] == 0:
        t += 1
        g = change_coordinates(f, [[1, 0], [t, 1]])
    return discriminant_univariate(list(g.coeffs))


# ---------------------------------------------------------------------------
# projective root counts


@dataclass(frozen=True)
class RootCount:
    degree: int
    distinct_real_projective: int
    distinct_real_affine: int
    has_root_at_infinity: bool
    is_squarefree_over_c: bool

    def to_dict(self):
        return {
            "degree": self.degree,
            "distinctRealProjective": self.distinct_real_projective,
            "distinctRealAffine": self.distinct_real_affine,
            "hasRootAtInfinity": self.has_root_at_infinity,
            "isSquarefreeOverC": self.is_squarefree_over_c,
        }


def is_squarefree(f: BinaryForm) -> bool:
    f.require_nonzero()
    if f.degree < 2:
        return True
    return resultant_gradient(f) != 0


def count_projective_real_roots(f: BinaryForm) -> RootCount:
    f.require_nonzero()
    if f.degree < 1:
        raise DegreeError("root count needs degree >= 1")
    p, drop = dehomogenize(f)
    affine = sturm_count(p) if len(p) > 1 else 0
    return RootCount(
        degree=f.degree,
        distinct_real_projective=affine + (1 if drop else 0),
        distinct_real_affine=affine,
        has_root_at_infinity=drop > 0,
        is_squarefree_over_c=is_squarefree(f),
    )


def _real_projective_count(f: BinaryForm) -> int:
    p, drop = dehomogenize(f)
    return (sturm_count(p) if len(p) > 1 else 0) + (1 if drop else 0)


def has_n_distinct_real_roots(f: BinaryForm) -> bool:
    """True iff ``f`` is square-free with all ``n`` projective roots real.

    ``n`` distinct roots of a degree-``n`` form are necessarily simple, so the
    resultant test is implied by the count.
    """
    f.require_nonzero()
    if f.degree < 1:
        raise DegreeError("root count needs degree >= 1")
    return _real_projective_count(f) == f.degree


def has_real_projective_root(f: BinaryForm) -> bool:
    f.require_nonzero()
    return f.degree >= 1 and _real_projective_count(f) > 0


# ---------------------------------------------------------------------------
# isolation


@dataclass(frozen=True)
class RootIsolation:
    """Isolating intervals ``(lo, hi]`` for the affine roots of ``p = f(t, 1)``.

    A degenerate interval ``lo == hi`` is an exact rational root.
    """

    poly: tuple
    intervals: tuple
    root_at_infinity: bool

    def refine(self, width) -> "RootIsolation":
        width = Fraction(width)
        return RootIsolation(self.poly, tuple(refine_root(self.poly, lo, hi, width) for lo, hi in self.intervals),
                             self.root_at_infinity)


def isolate_univariate(p, seq: Optional[SturmSequence] = None):
    """Disjoint intervals ``(lo, hi]`` each holding exactly one real root of square-free ``p``."""
    p = primitive_int(p)
    if len(p) <= 1:
        return []
    if seq is None:
        seq = sturm_sequence(p)
    if not seq.is_squarefree:
        raise NotSquarefreeError("root isolation needs a square-free polynomial")
    bound = cauchy_bound(p)
    out = []
    stack = [(-bound, bound, seq.variations(-bound), seq.variations(bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = seq.variations(mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def refine_root(p, lo, hi, width):
    """Shrink an isolating interval ``(lo, hi]`` of a simple root of integer ``p`` below ``width``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo == hi:
        return lo, hi
    s_hi = sign_at(p, hi)
    if s_hi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def isolate_real_roots(f: BinaryForm) -> RootIsolation:
    f.require_nonzero()
    if not is_squarefree(f):
        raise NotSquarefreeError("isolate_real_roots needs a square-free form; reduce it first")
    p, drop = dehomogenize(f)
    pi = primitive_int(p)
    return RootIsolation(tuple(pi), tuple(isolate_univariate(pi)), drop > 0)
