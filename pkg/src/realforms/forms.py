"""Exact binary forms and their calculus.

A :class:`BinaryForm` of degree ``n`` stores the coefficients ``c_0..c_n`` of

    f(x, y) = sum_i c_i x^(n-i) y^i

as :class:`fractions.Fraction`. The binomially scaled coefficients
``a_i = c_i / C(n, i)`` (the convention used by catalecticants and by the
Hessian-at-(1, 0) formulas) are exposed as a derived view.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import DegreeError, SingularMatrixError, ZeroFormError


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("float coefficients are not exact; pass a Fraction or a string")
    return Fraction(v)


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial in ``x, y`` with exact rational coefficients."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        cs = tuple(_frac(c) for c in coeffs)
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    # construction helpers

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls([0] * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, i: int, c=1) -> "BinaryForm":
        """``c * x^(degree-i) * y^i``."""
        cs = [0] * (degree + 1)
        cs[i] = c
        return cls(cs)

    @classmethod
    def from_linear_factors(cls, factors: Iterable[tuple], scale=1) -> "BinaryForm":
        """Product of ``(a*x + b*y)`` over the given ``(a, b)`` pairs, times ``scale``."""
        out = cls([scale])
        for a, b in factors:
            out = out * cls([a, b])
        return out

    @classmethod
    def from_roots(cls, roots: Iterable, scale=1) -> "BinaryForm":
        """Product of ``(x - r*y)``; ``None`` stands for the root at infinity (factor ``y``)."""
        return cls.from_linear_factors(((0, 1) if r is None else (1, -_frac(r)) for r in roots), scale)

    @classmethod
    def from_binomial(cls, a: Sequence) -> "BinaryForm":
        """Form with binomially scaled coefficients ``a_i``."""
        n = len(a) - 1
        return cls([comb(n, i) * _frac(v) for i, v in enumerate(a)])

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def binomial_coeffs(self) -> tuple:
        n = self.degree
        return tuple(c / comb(n, i) for i, c in enumerate(self.coeffs))

    def require_nonzero(self) -> "BinaryForm":
        if self.is_zero():
            raise ZeroFormError("operation requires a nonzero form")
        return self

    def __repr__(self):
        from .parser import format_form

        return f"BinaryForm({format_form(self)!r}, degree={self.degree})"

    # arithmetic

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeError("cannot add forms of different degree")
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-c for c in self.coeffs)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return BinaryForm(out)
        s = _frac(other)
        return BinaryForm(c * s for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BinaryForm":
        out = BinaryForm([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x, y):
        return evaluate(self, x, y)


@dataclass(frozen=True)
class LinearForm:
    """``alpha*x + beta*y`` with ``(alpha, beta) != (0, 0)``."""

    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha, beta):
        a, b = _frac(alpha), _frac(beta)
        if a == 0 and b == 0:
            raise ValueError("linear form (0, 0) is not allowed")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def as_form(self) -> BinaryForm:
        return BinaryForm([self.alpha, self.beta])


def evaluate(f: BinaryForm, x, y) -> Fraction:
    """Exact value of ``f`` at ``(x, y)``."""
    x, y = _frac(x), _frac(y)
    n = f.degree
    # Horner in x/y form without dividing: sum c_i x^(n-i) y^i
    acc = Fraction(0)
    ypow = Fraction(1)
    xpows = [Fraction(1)]
    for _ in range(n):
        xpows.append(xpows[-1] * x)
    for i, c in enumerate(f.coeffs):
        if c:
            acc += c * xpows[n - i] * ypow
        ypow *= y
    return acc


def _require_degree(f: BinaryForm, at_least: int):
    if f.degree < at_least:
        raise DegreeError(f"operation needs degree >= {at_least}, got {f.degree}")


def partial_x(f: BinaryForm) -> BinaryForm:
    _require_degree(f, 1)
    n = f.degree
    return BinaryForm(c * (n - i) for i, c in enumerate(f.coeffs[:-1]))


def partial_y(f: BinaryForm) -> BinaryForm:
    _require_degree(f, 1)
    return BinaryForm(c * i for i, c in enumerate(f.coeffs) if i > 0)


def mixed_partial(f: BinaryForm, a: int, b: int) -> BinaryForm:
    """``d^a/dx^a d^b/dy^b f`` computed directly from falling factorials."""
    n = f.degree
    if a + b > n:
        return BinaryForm([0])
    out = []
    for j in range(n - a - b + 1):
        i = j + b  # source monomial x^(n-i) y^i
        c = f.coeffs[i]
        out.append(c * (factorial(n - i) // factorial(n - i - a)) * (factorial(i) // factorial(i - b)))
    return BinaryForm(out)


def directional_derivative(f: BinaryForm, d) -> BinaryForm:
    """``alpha*f_x + beta*f_y`` for ``d = LinearForm(alpha, beta)`` (or a plain pair)."""
    if not isinstance(d, LinearForm):
        d = LinearForm(*d)
    _require_degree(f, 1)
    return d.alpha * partial_x(f) + d.beta * partial_y(f)


def change_coordinates(f: BinaryForm, m) -> BinaryForm:
    """Substitute ``x -> m11 x + m12 y``, ``y -> m21 x + m22 y``.

    Applying ``M1`` and then ``M2`` equals applying the product ``M1 @ M2``.
    """
    (m11, m12), (m21, m22) = [[_frac(v) for v in row] for row in m]
    if m11 * m22 - m12 * m21 == 0:
        raise SingularMatrixError("coordinate change matrix is singular")
    n = f.degree
    X = BinaryForm([m11, m12])
    Y = BinaryForm([m21, m22])
    xp = [BinaryForm([1])]
    yp = [BinaryForm([1])]
    for _ in range(n):
        xp.append(xp[-1] * X)
        yp.append(yp[-1] * Y)
    out = BinaryForm.zero(n)
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + c * (xp[n - i] * yp[i])
    return out


def dehomogenize(f: BinaryForm) -> tuple:
    """Return ``(p, drop)`` with ``p = f(x, 1)`` as a descending coefficient list.

    ``drop`` counts the vanishing leading coefficients, i.e. the multiplicity of
    the projective root ``(1:0)``.
    """
    f.require_nonzero()
    drop = 0
    while f.coeffs[drop] == 0:
        drop += 1
    return list(f.coeffs[drop:]), drop


def homogenize(p: Sequence, degree: int) -> BinaryForm:
    """Inverse of :func:`dehomogenize`: pad a descending list up to ``degree``."""
    p = [_frac(c) for c in p]
    if len(p) - 1 > degree:
        raise DegreeError("polynomial degree exceeds the target form degree")
    return BinaryForm([0] * (degree + 1 - len(p)) + p)


def hessian(f: BinaryForm) -> BinaryForm:
    """``f_xx * f_yy - f_xy**2``, a form of degree ``2n - 4``."""
    _require_degree(f, 2)
    fxx = mixed_partial(f, 2, 0)
    fxy = mixed_partial(f, 1, 1)
    fyy = mixed_partial(f, 0, 2)
    return fxx * fyy - fxy * fxy
