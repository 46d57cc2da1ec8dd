"""Normalized gradient maps of a binary form on the unit circle.

For a square-free form ``f`` of degree ``n`` the gradient never vanishes on
``S^1``, so

    phi_bar(theta) = (f_x, f_y) / |grad f|
    psi_bar(theta) = (x f_x + y f_y, -y f_x + x f_y) / |grad f|

are maps ``S^1 -> S^1`` evaluated at ``(x, y) = (cos theta, sin theta)``.
``psi_bar`` is ``phi_bar`` rotated by ``-theta``; its first component is
``n f / |grad f|`` by Euler's identity. The angular velocity of ``phi_bar`` is
``H(f) / ((n - 1) |grad f|^2)`` and that of ``psi_bar`` is one less.

Floating point is confined to this module. The exact degree of ``phi_bar`` is
computed separately by :func:`degree_phi_exact` from certified root data.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import roots
from .errors import DegreeError, ExactMethodInapplicable, MapBreakdownError, NotSquarefreeError, UndersamplingError
from .forms import BinaryForm, dehomogenize, evaluate, hessian, partial_x, partial_y

MAPS = ("phi", "psi")
RAW_NORM_THRESHOLD = 1e-9


@dataclass(frozen=True)
class CircleMapSample:
    theta: float
    value: tuple
    raw_value: tuple
    angular_velocity: float


@dataclass(frozen=True)
class WindingResult:
    degree: int
    deviation: float
    max_step_angle: float
    min_raw_norm: float
    steps: int

    def to_dict(self):
        return {
            "degree": self.degree,
            "deviation": self.deviation,
            "maxStepAngle": self.max_step_angle,
            "minRawNorm": self.min_raw_norm,
            "steps": self.steps,
        }


def default_steps(f: BinaryForm) -> int:
    return max(4096, 256 * f.degree)


def _float_eval(coeffs, x, y):
    n = len(coeffs) - 1
    out = np.zeros(np.broadcast(x, y).shape)
    for i, c in enumerate(coeffs):
        if c:
            out = out + c * x ** (n - i) * y ** i
    return out


class _Gradient:
    """Float evaluators for ``f_x``, ``f_y`` and ``H(f)``, built once per form."""

    def __init__(self, f: BinaryForm):
        if f.degree < 2:
            raise DegreeError("circle maps need degree >= 2")
        self.n = f.degree
        self.fx = [float(c) for c in partial_x(f).coeffs]
        self.fy = [float(c) for c in partial_y(f).coeffs]
        self.h = [float(c) for c in hessian(f).coeffs]
        self.scale = max(abs(float(c)) for c in f.coeffs)
        if self.scale == 0:
            raise MapBreakdownError("zero form")

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        x, y = np.cos(theta), np.sin(theta)
        gx = _float_eval(self.fx, x, y)
        gy = _float_eval(self.fy, x, y)
        h = _float_eval(self.h, x, y)
        norm = np.hypot(gx, gy)
        if np.any(norm < RAW_NORM_THRESHOLD * self.scale):
            raise MapBreakdownError("gradient nearly vanishes on the circle; is the form square-free?")
        return x, y, gx, gy, h, norm


def sample_map(f: BinaryForm, which: str, thetas):
    """Vectorized samples: returns ``(vx, vy, raw_x, raw_y, angular_velocity)`` arrays."""
    if which not in MAPS:
        raise ValueError(f"map must be one of {MAPS}")
    x, y, gx, gy, h, norm = _Gradient(f)(thetas)
    av = h / ((f.degree - 1) * norm ** 2)
    if which == "psi":
        rx, ry = x * gx + y * gy, -y * gx + x * gy
        av = av - 1.0
    else:
        rx, ry = gx, gy
    return rx / norm, ry / norm, rx, ry, av


def _single(f, which, theta):
    vx, vy, rx, ry, av = sample_map(f, which, np.array([theta]))
    return CircleMapSample(float(theta), (float(vx[0]), float(vy[0])), (float(rx[0]), float(ry[0])), float(av[0]))


def phi_bar(f: BinaryForm, theta: float) -> CircleMapSample:
    return _single(f, "phi", theta)


def psi_bar(f: BinaryForm, theta: float) -> CircleMapSample:
    return _single(f, "psi", theta)


def winding_number_numeric(f: BinaryForm, which: str = "phi", steps: int | None = None) -> WindingResult:
    """Degree of ``phi_bar`` or ``psi_bar`` from shortest-arc increments on a uniform grid.

    The pi/2 guard catches grids that are too coarse for the rotation they see,
    but a full turn squeezed between two samples (roots much closer together
    than the grid spacing) is invisible to it. Use :func:`degree_phi_exact`
    when that matters.
    """
    if steps is None:
        steps = default_steps(f)
    if steps < 64 * f.degree:
        raise ValueError(f"need at least {64 * f.degree} steps for degree {f.degree}")
    thetas = 2 * np.pi * np.arange(steps) / steps
    vx, vy, rx, ry, _ = sample_map(f, which, thetas)
    z = vx + 1j * vy
    inc = np.angle(np.roll(z, -1) / z)
    max_step = float(np.max(np.abs(inc)))
    if max_step >= np.pi / 2:
        raise UndersamplingError(f"angle increment {max_step:.3f} >= pi/2; increase steps")
    total = float(np.sum(inc)) / (2 * np.pi)
    deg = int(round(total))
    return WindingResult(deg, abs(total - deg), max_step, float(np.min(np.hypot(rx, ry))), steps)


def _sign_at_algebraic(q, p, lo, hi):
    """Sign of ``q`` at the unique root of square-free ``p`` in ``(lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    for _ in range(4000):
        if lo == hi:
            s = roots._sign(roots.poly_eval(q, lo))
            if s == 0:
                raise NotSquarefreeError("f_x and f_y share a root")
            return s
        if roots.sturm_count(q, lo, hi) == 0 and roots.poly_eval(q, lo) != 0:
            return roots._sign(roots.poly_eval(q, hi))
        lo, hi = roots.refine_root(p, lo, hi, (hi - lo) / 4)
    raise NotSquarefreeError("could not separate a root of f_x from the roots of f_y")


def degree_phi_exact(f: BinaryForm) -> int:
    """Certified degree of ``phi_bar`` when the Hessian has no real projective root.

    Counts preimages of ``(0, 1)``, i.e. circle points with ``f_x = 0`` and
    ``f_y > 0``, and multiplies by the constant sign of the angular velocity.
    """
    if f.degree < 2:
        raise DegreeError("degree_phi_exact needs degree >= 2")
    if not roots.is_squarefree(f):
        raise NotSquarefreeError("degree_phi_exact needs a square-free form")
    h = hessian(f)
    if h.is_zero() or roots.has_real_projective_root(h):
        raise ExactMethodInapplicable("H(f) vanishes at a real point; phi_bar is not an immersion")
    orientation = roots._sign(evaluate(h, 1, 0))
    n = f.degree
    antipode = -1 if (n - 1) % 2 else 1
    fx, fy = partial_x(f), partial_y(f)
    q = list(fy.coeffs)  # f_y(t, 1), formal degree n - 1
    signs = []
    p, drop = dehomogenize(fx)
    if drop:
        signs.append(roots._sign(fy.coeffs[0]))
    if len(p) > 1:
        sq = roots.squarefree_part(p)
        for lo, hi in roots.isolate_univariate(sq):
            signs.append(_sign_at_algebraic(q, sq, lo, hi))
    count = sum((s > 0) + (s * antipode > 0) for s in signs)
    return orientation * count


def hessian_at_point(f: BinaryForm, x, y) -> Fraction:
    return evaluate(hessian(f), x, y)


def quadratic_hessian_check(h: BinaryForm) -> tuple:
    """``(H(h), -disc(h))`` for a binary quadratic; the two agree."""
    if h.degree != 2:
        raise DegreeError("quadratic_hessian_check needs a degree-2 form")
    return hessian(h).coeffs[0], -roots.discriminant_form(h)


TRAJECTORY_HEADER = ("theta", "vx", "vy", "angular_velocity")


def trajectory_rows(f: BinaryForm, which: str, steps: int):
    thetas = 2 * np.pi * np.arange(steps) / steps
    vx, vy, _, _, av = sample_map(f, which, thetas)
    return [(float(t), float(a), float(b), float(w)) for t, a, b, w in zip(thetas, vx, vy, av)]


def trajectory_csv(f: BinaryForm, which: str = "phi", steps: int = 256) -> str:
    """CSV dump with header ``theta,vx,vy,angular_velocity``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRAJECTORY_HEADER)
    for row in trajectory_rows(f, which, steps):
        w.writerow([repr(v) for v in row])
    return buf.getvalue()


def lifted_angle(f: BinaryForm, which: str, thetas) -> np.ndarray:
    """Continuous angle of the map along increasing ``thetas`` (dense grids only)."""
    vx, vy, *_ = sample_map(f, which, thetas)
    return np.unwrap(np.arctan2(vy, vx))


__all__ = [
    "CircleMapSample",
    "WindingResult",
    "phi_bar",
    "psi_bar",
    "sample_map",
    "winding_number_numeric",
    "degree_phi_exact",
    "hessian_at_point",
    "quadratic_hessian_check",
    "trajectory_csv",
    "trajectory_rows",
    "lifted_angle",
    "default_steps",
]
