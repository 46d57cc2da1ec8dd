"""Waring rank of binary forms via catalecticants and apolarity.

A form ``g = sum_j b_j x^(r-j) y^j`` is *apolar* to ``f`` when the differential
operator ``g(d/dx, d/dy)`` kills ``f``. The degree-``r`` apolar forms make up the
kernel of a catalecticant-type linear map, and

* ``f`` has a complex decomposition with ``r`` terms iff some apolar form of
  degree ``r`` is square-free;
* ``f`` has a real decomposition with ``r`` terms iff some apolar form of
  degree ``r`` has ``r`` distinct real roots. The roots ``(alpha:beta)`` of
  that form give the linear forms ``alpha*x + beta*y``.

The apolar ideal of a binary form is generated by two forms of degrees
``d1 <= d2`` with ``d1 + d2 = n + 2``; below degree ``d2`` every apolar form is
a multiple of the first generator. Real rank ``n`` is decided by root counting
alone: a square-free real form has rank ``n`` exactly when its ``n`` roots are
real and distinct, and rank at most ``n - 1`` otherwise. Strictly between the
two bounds the real rank is searched for, and every candidate is certified
exactly before it is used.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from . import linalg, roots
from .errors import ApolarityError, DegreeError, NotSquarefreeError, SingularMatrixError
from .forms import BinaryForm, mixed_partial


@dataclass(frozen=True)
class SearchBudget:
    max_candidates: int = 1000
    grid_bound: int = 3
    grid_mesh: Fraction = Fraction(1, 2)
    seed: int = 0

    def to_dict(self):
        return {
            "maxCandidates": self.max_candidates,
            "gridBound": self.grid_bound,
            "gridMesh": str(self.grid_mesh),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            max_candidates=int(d.get("maxCandidates", cls.max_candidates)),
            grid_bound=int(d.get("gridBound", cls.grid_bound)),
            grid_mesh=Fraction(d.get("gridMesh", cls.grid_mesh)),
            seed=int(d.get("seed", cls.seed)),
        )


@dataclass(frozen=True)
class Catalecticant:
    k: int
    matrix: tuple

    @property
    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.matrix])


@dataclass(frozen=True)
class Decomposition:
    """``f = sum lambda_i (alpha_i x + beta_i y)^n``; exact terms hold Fractions, numeric ones floats."""

    terms: tuple
    degree: int
    exact: bool

    def reconstruct(self) -> list:
        n = self.degree
        out = [0] * (n + 1)
        for lam, (a, b) in self.terms:
            for j in range(n + 1):
                out[j] += lam * comb(n, j) * a ** (n - j) * b ** j
        return out

    def residual(self, f: BinaryForm) -> float:
        """Max coefficient deviation relative to the largest ``|c_i|`` of ``f``."""
        rec = self.reconstruct()
        if self.exact:
            dev = max(abs(Fraction(r) - c) for r, c in zip(rec, f.coeffs))
            return float(dev / max(abs(c) for c in f.coeffs))
        scale = max(abs(float(c)) for c in f.coeffs)
        return max(abs(float(r) - float(c)) for r, c in zip(rec, f.coeffs)) / scale

    def to_dict(self):
        conv = str if self.exact else float
        return {
            "exact": self.exact,
            "terms": [{"lambda": conv(lam), "alpha": conv(a), "beta": conv(b)} for lam, (a, b) in self.terms],
        }


@dataclass
class RankCertificate:
    degree: int
    complex_lower: int
    complex_exact: Optional[int]
    real_lower: int
    real_upper: int
    method: str
    witness: Optional[Decomposition] = None
    history: list = field(default_factory=list)

    @property
    def real_exact(self) -> Optional[int]:
        return self.real_lower if self.real_lower == self.real_upper else None

    def _tighten(self, lower=None, upper=None):
        if lower is not None:
            self.real_lower = max(self.real_lower, lower)
        if upper is not None:
            self.real_upper = min(self.real_upper, upper)
        self.history.append((self.real_lower, self.real_upper))

    def to_dict(self):
        return {
            "degree": self.degree,
            "complexLower": self.complex_lower,
            "complexExact": self.complex_exact,
            "realLower": self.real_lower,
            "realUpper": self.real_upper,
            "realExact": self.real_exact,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


# ---------------------------------------------------------------------------
# catalecticants and apolar slices


def catalecticant(f: BinaryForm, k: int) -> Catalecticant:
    n = f.degree
    if not 1 <= k <= n - 1:
        raise DegreeError(f"catalecticant index k must lie in [1, {n - 1}]")
    a = f.binomial_coeffs
    return Catalecticant(k, tuple(tuple(a[i + j] for j in range(n - k + 1)) for i in range(k + 1)))


def catalecticant_bound(f: BinaryForm) -> int:
    """Largest catalecticant rank, a lower bound for the complex rank."""
    if f.degree < 2:
        return 0 if f.is_zero() else 1
    return max(catalecticant(f, k).rank for k in range(1, f.degree))


def apply_differential(g: BinaryForm, f: BinaryForm) -> BinaryForm:
    """``g(d/dx, d/dy) f``."""
    r, n = g.degree, f.degree
    out = BinaryForm.zero(max(n - r, 0))
    if r > n:
        return out
    for j, b in enumerate(g.coeffs):
        if b:
            out = out + b * mixed_partial(f, r - j, j)
    return out


def apolar_slice(f: BinaryForm, r: int) -> list:
    """Basis of the degree-``r`` forms apolar to ``f``."""
    n = f.degree
    f.require_nonzero()
    if not 1 <= r <= n:
        raise DegreeError(f"apolar slice degree must lie in [1, {n}]")
    cols = [mixed_partial(f, r - j, j).coeffs for j in range(r + 1)]
    rows = [[cols[j][i] for j in range(r + 1)] for i in range(n - r + 1)]
    basis = linalg.nullspace(rows)
    # pad primitive integer vectors back to r + 1 entries (primitive_int strips leading zeros)
    out = []
    for v in basis:
        lead = next(i for i, c in enumerate(v) if c != 0)
        prim = roots.primitive_int(v[lead:])
        out.append(BinaryForm([0] * lead + prim))
    return out


def _combine(basis, coeffs) -> BinaryForm:
    out = BinaryForm.zero(basis[0].degree)
    for b, t in zip(basis, coeffs):
        if t:
            out = out + t * b
    return out


def _squarefree_in_span(basis, tries=500) -> Optional[BinaryForm]:
    """Some square-free element of the span, searched over small integer combinations."""
    if len(basis) == 1:
        return basis[0] if roots.is_squarefree(basis[0]) else None
    k = len(basis)
    for height in range(1, tries):
        for coeffs in itertools.product(range(-height, height + 1), repeat=k):
            if max(map(abs, coeffs)) != height:
                continue
            g = _combine(basis, coeffs)
            if not g.is_zero() and roots.is_squarefree(g):
                return g
            tries -= 1
            if tries <= 0:
                return None
    return None


@dataclass(frozen=True)
class _ApolarStructure:
    d1: int
    generator: BinaryForm
    pencil: bool  # d1 == d2: the lowest slice is two-dimensional


def _apolar_structure(f: BinaryForm) -> _ApolarStructure:
    for r in range(1, f.degree + 1):
        basis = apolar_slice(f, r)
        if basis:
            return _ApolarStructure(r, basis[0], len(basis) >= 2)
    raise DegreeError("form has no apolar slice of degree <= n")  # unreachable for n >= 1


def complex_rank(f: BinaryForm) -> int:
    """Smallest ``r`` whose apolar slice holds a square-free form (Sylvester's algorithm)."""
    f.require_nonzero()
    n = f.degree
    if n == 0:
        return 1
    s = _apolar_structure(f)
    if s.pencil:
        if _squarefree_in_span(apolar_slice(f, s.d1)) is None:
            raise ArithmeticError("pencil of coprime apolar generators without a square-free member")
        return s.d1
    if roots.is_squarefree(s.generator):
        return s.d1
    return n + 2 - s.d1


# ---------------------------------------------------------------------------
# decompositions


def _refined_root(p, lo, hi):
    """Refine to relative width 2^-64; return ``(exact rational root or None, float value)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    width = max(abs(lo), abs(hi), Fraction(1)) / 2 ** 64
    lo, hi = roots.refine_root(p, lo, hi, width)
    if lo == hi:
        return lo, float(lo)
    mid = (lo + hi) / 2
    # rational roots have denominators dividing lc(p); small ones are recovered here
    cand = mid.limit_denominator(min(abs(p[0]), 2 ** 30))
    if abs(p[0]) % cand.denominator == 0 and roots.sign_at(p, cand) == 0:
        return cand, float(cand)
    return None, float(mid)


def _root_directions(g: BinaryForm):
    """Real root directions ``(alpha, beta)`` of a square-free real-rooted ``g``, exactly if possible."""
    iso = roots.isolate_real_roots(g)
    p = list(iso.poly)
    refined = [_refined_root(p, lo, hi) for lo, hi in iso.intervals]
    if all(r is not None for r, _ in refined):
        dirs = [(r, Fraction(1)) for r, _ in refined]
        if iso.root_at_infinity:
            dirs.append((Fraction(1), Fraction(0)))
        return dirs, True
    dirs = []
    for _, t in refined:
        norm = float(np.hypot(t, 1.0))
        dirs.append((t / norm, 1.0 / norm))
    if iso.root_at_infinity:
        dirs.append((1.0, 0.0))
    return dirs, False


NUMERIC_RESIDUAL = 1e-8


def decompose_from_apolar(f: BinaryForm, g: BinaryForm) -> Decomposition:
    """Real Waring decomposition of ``f`` with one term per root of the apolar form ``g``."""
    f.require_nonzero()
    g.require_nonzero()
    if not apply_differential(g, f).is_zero():
        raise ApolarityError("g is not apolar to f")
    r, n = g.degree, f.degree
    if not roots.has_n_distinct_real_roots(g):
        raise ApolarityError("g must have deg(g) distinct real roots")
    dirs, exact = _root_directions(g)
    if len(dirs) != r:
        raise ApolarityError("root isolation of g lost a root")
    if exact:
        matrix = [[comb(n, j) * a ** (n - j) * b ** j for a, b in dirs] for j in range(n + 1)]
        lams = linalg.solve(matrix, list(f.coeffs))
        return Decomposition(tuple((lam, d) for lam, d in zip(lams, dirs)), n, True)
    A = np.array([[comb(n, j) * a ** (n - j) * b ** j for a, b in dirs] for j in range(n + 1)])
    rhs = np.array([float(c) for c in f.coeffs])
    lams, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    dec = Decomposition(tuple((float(lam), d) for lam, d in zip(lams, dirs)), n, False)
    if dec.residual(f) > NUMERIC_RESIDUAL:
        raise SingularMatrixError(f"numeric decomposition residual {dec.residual(f):.2e} exceeds {NUMERIC_RESIDUAL}")
    return dec


def _top_rank_generator(f: BinaryForm) -> BinaryForm:
    """A degree-n apolar form with n distinct rational roots.

    ``g = h * (beta x - alpha y)`` with ``h`` a fixed product of ``n - 1``
    rational linear factors; apolarity is one linear condition on ``(alpha, beta)``.
    """
    n = f.degree
    for shift in range(0, 4 * n + 4):
        rts = [Fraction(k + shift) for k in range(n - 1)]
        h = BinaryForm.from_roots(rts)
        # <h*(beta x - alpha y), f> = beta*P - alpha*Q vanishes at (alpha, beta) = (P, Q)
        P = apply_differential(h * BinaryForm([1, 0]), f).coeffs[0]
        Q = apply_differential(h * BinaryForm([0, 1]), f).coeffs[0]
        if P == 0 and Q == 0:
            continue
        if Q != 0 and P / Q in rts:
            continue
        g = h * BinaryForm([Q, -P])
        if roots.has_n_distinct_real_roots(g):
            return g
    raise ArithmeticError("no rational top-rank generator found")


# ---------------------------------------------------------------------------
# real rank


def _grid_points(k, budget: SearchBudget):
    mesh = Fraction(budget.grid_mesh)
    steps = int(Fraction(budget.grid_bound) / mesh)
    values = [i * mesh for i in range(-steps, steps + 1)]
    for lead in range(k):
        for tail in itertools.product(values, repeat=k - 1 - lead):
            yield (Fraction(0),) * lead + (Fraction(1),) + tail


def _random_points(k, budget: SearchBudget, r: int):
    rng = np.random.default_rng([budget.seed, r])
    while True:
        v = rng.standard_normal(k)
        pt = tuple(Fraction(int(round(x * 1024)), 1024) for x in v)
        if any(pt):
            yield pt


def _candidates(basis, budget: SearchBudget, r: int):
    k = len(basis)
    if k == 1:
        yield basis[0]
        return
    # scale basis elements to comparable size by powers of two so grid steps are meaningful
    scaled = []
    for b in basis:
        m = max(abs(c) for c in b.coeffs)
        e = int(m.numerator).bit_length() - int(m.denominator).bit_length()
        scaled.append(b * Fraction(2) ** (-e))
    for pt in itertools.chain(_grid_points(k, budget), _random_points(k, budget, r)):
        yield _combine(scaled, pt)


def _search_slice(f: BinaryForm, r: int, budget: SearchBudget, remaining: int):
    """First real-rooted square-free apolar form of degree ``r``, and the candidates used."""
    basis = apolar_slice(f, r)
    if not basis:
        return None, 0
    used = 0
    for g in _candidates(basis, budget, r):
        if used >= remaining:
            break
        used += 1
        if not g.is_zero() and roots.has_n_distinct_real_roots(g):
            return g, used
    return None, used


def real_rank(f: BinaryForm, budget: SearchBudget | None = None) -> RankCertificate:
    """Certified bounds on the real Waring rank of a square-free form, with a witness when found."""
    budget = budget or SearchBudget()
    f.require_nonzero()
    n = f.degree
    if n < 1:
        raise DegreeError("real_rank needs degree >= 1")
    if not roots.is_squarefree(f):
        raise NotSquarefreeError("real_rank needs a form without repeated complex roots")
    crank = complex_rank(f)
    cert = RankCertificate(n, crank, crank, crank, n, "catalecticant_only")
    cert.history.append((cert.real_lower, cert.real_upper))

    if roots.has_n_distinct_real_roots(f):
        cert._tighten(lower=n)
        cert.method = "corollary_top_rank"
        if n == 1:
            cert.witness = Decomposition(((Fraction(1), f.coeffs),), 1, True)
        else:
            try:
                cert.witness = decompose_from_apolar(f, _top_rank_generator(f))
            except (ArithmeticError, ApolarityError, SingularMatrixError):
                cert.witness = None
        return cert

    cert._tighten(upper=n - 1)
    s = _apolar_structure(f)
    if not s.pencil and not roots.has_n_distinct_real_roots(s.generator):
        # every apolar form of degree < n + 2 - d1 is a multiple of the generator
        cert._tighten(lower=n + 2 - s.d1)

    remaining = budget.max_candidates
    for r in range(cert.real_lower, cert.real_upper + 1):
        g, used = _search_slice(f, r, budget, remaining)
        remaining -= used
        if g is not None:
            cert._tighten(upper=r)
            cert.method = "apolar_search"
            try:
                cert.witness = decompose_from_apolar(f, g)
            except (ApolarityError, SingularMatrixError):
                cert.witness = None
            break
        if remaining <= 0:
            break
    return cert
