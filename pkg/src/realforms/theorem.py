"""Per-form checks of the all-real-roots criteria, the winding degrees and the top-rank rule.

Three criteria are evaluated for a square-free real form ``f`` of degree ``n >= 3``:

A. ``f`` has ``n`` distinct real projective roots.
B. every member ``alpha*f_x + beta*f_y`` of the derivative pencil has ``n - 1``
   distinct real roots.
C. the Hessian ``H(f)`` has no real projective root and ``H(f)(1, 0) < 0``.

A and B are equivalent for every square-free form; B implies C. Reports carry
these as plain data so that callers (tests, the CLI, the experiment harness)
decide what to do with an inconsistency.

Criterion B quantifies over the whole real projective line. It is decided
exactly: the discriminant ``D(alpha, beta)`` of the pencil member is a binary
form of degree ``2n - 4``. Where ``D`` does not vanish the member is square-free
and its number of real roots cannot change, so when ``D`` has no real root the
count is the same for every member and one member (``f_x``) settles it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg, roots
from .circle import degree_phi_exact, winding_number_numeric
from .errors import DegreeError, ExactMethodInapplicable, MapBreakdownError, NotSquarefreeError, UndersamplingError
from .forms import BinaryForm, evaluate, hessian, partial_x, partial_y
from .parser import format_form
from .rank import SearchBudget, real_rank


def _require_theorem_input(f: BinaryForm):
    f.require_nonzero()
    if f.degree < 3:
        raise DegreeError("the criteria are stated for degree >= 3")
    if not roots.is_squarefree(f):
        raise NotSquarefreeError("the criteria need a form without repeated complex roots")


def pencil_discriminant(f: BinaryForm) -> BinaryForm:
    """``D(alpha, beta) = disc(alpha*f_x + beta*f_y)`` as an exact form of degree ``2n - 4``.

    ``D(1, t)`` is a polynomial of degree at most ``2n - 4`` in ``t``; it is
    sampled at ``2n - 3`` integers and interpolated exactly.
    """
    fx, fy = partial_x(f), partial_y(f)
    d = 2 * f.degree - 4
    ts = list(range(d + 1))
    values = []
    for t in ts:
        member = fx + t * fy
        values.append(roots.discriminant_form(member) if not member.is_zero() else Fraction(0))
    vander = [[Fraction(t) ** k for k in range(d + 1)] for t in ts]
    return BinaryForm(linalg.solve(vander, values))


def check_criterion_A(f: BinaryForm) -> bool:
    _require_theorem_input(f)
    return roots.has_n_distinct_real_roots(f)


def check_criterion_B(f: BinaryForm) -> bool:
    _require_theorem_input(f)
    D = pencil_discriminant(f)
    if D.is_zero() or roots.has_real_projective_root(D):
        return False
    return roots.has_n_distinct_real_roots(partial_x(f))


def check_criterion_C(f: BinaryForm) -> bool:
    _require_theorem_input(f)
    h = hessian(f)
    if h.is_zero() or roots.has_real_projective_root(h):
        return False
    return evaluate(h, 1, 0) < 0


@dataclass(frozen=True)
class TheoremReport:
    form: str
    degree: int
    criterionA: bool
    criterionB: bool
    criterionC: bool
    windingPhi: Optional[int]
    windingPsi: Optional[int]
    windingPhiExact: Optional[int]
    consistent: bool

    def to_dict(self):
        return {
            "schemaVersion": 1,
            "form": self.form,
            "degree": self.degree,
            "criterionA": self.criterionA,
            "criterionB": self.criterionB,
            "criterionC": self.criterionC,
            "windingPhi": self.windingPhi,
            "windingPsi": self.windingPsi,
            "windingPhiExact": self.windingPhiExact,
            "consistent": self.consistent,
        }


def _numeric_degree(f, which, steps):
    try:
        return winding_number_numeric(f, which, steps).degree
    except (UndersamplingError, MapBreakdownError):
        return None


def verify_theorem1(f: BinaryForm, steps: Optional[int] = None) -> TheoremReport:
    _require_theorem_input(f)
    a = check_criterion_A(f)
    b = check_criterion_B(f)
    c = check_criterion_C(f)
    try:
        exact = degree_phi_exact(f)
    except ExactMethodInapplicable:
        exact = None
    return TheoremReport(
        form=format_form(f),
        degree=f.degree,
        criterionA=a,
        criterionB=b,
        criterionC=c,
        windingPhi=_numeric_degree(f, "phi", steps),
        windingPsi=_numeric_degree(f, "psi", steps),
        windingPhiExact=exact,
        consistent=a == b,
    )


@dataclass(frozen=True)
class CorollaryReport:
    form: str
    degree: int
    criterionA: bool
    complexExact: int
    realLower: int
    realUpper: int
    realExact: Optional[int]
    method: str
    status: str  # "exact" or "bounds"
    consistent: bool

    def to_dict(self):
        d = {"schemaVersion": 1}
        d.update(self.__dict__)
        return d


def verify_corollary(f: BinaryForm, budget: Optional[SearchBudget] = None) -> CorollaryReport:
    """Compare the certified real rank with the root count: rank ``n`` iff ``n`` real roots."""
    _require_theorem_input(f)
    a = check_criterion_A(f)
    cert = real_rank(f, budget)
    n = f.degree
    if cert.real_exact is not None:
        status, consistent = "exact", (cert.real_exact == n) == a
    else:
        # bounds only arise below the top rank
        status, consistent = "bounds", (not a) and cert.real_upper < n
    return CorollaryReport(
        form=format_form(f),
        degree=n,
        criterionA=a,
        complexExact=cert.complex_exact,
        realLower=cert.real_lower,
        realUpper=cert.real_upper,
        realExact=cert.real_exact,
        method=cert.method,
        status=status,
        consistent=consistent,
    )
