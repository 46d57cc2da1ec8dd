from fractions import Fraction
import math

import numpy as np
import pytest
import sympy
from hypothesis import given

from realforms import (
    ApolarityError,
    BinaryForm,
    NotSquarefreeError,
    SearchBudget,
    apolar_slice,
    catalecticant,
    catalecticant_bound,
    change_coordinates,
    complex_rank,
    decompose_from_apolar,
    has_n_distinct_real_roots,
    parse_form,
    real_rank,
)
from realforms.linalg import nullspace
from realforms.rank import apply_differential
from oracles import random_gaussian_form, random_int_form, random_real_rooted
from strategies import forms

ROTATED = parse_form("x^3 - 3*x*y^2")
SUM_OF_CUBES = parse_form("x^3 + y^3")


def normalized_terms(dec):
    """Terms rescaled to unit linear forms with beta >= 0, sorted; comparable across scalings."""
    out = []
    n = dec.degree
    for lam, (a, b) in dec.terms:
        a, b, lam = float(a), float(b), float(lam)
        r = math.hypot(a, b)
        a, b, lam = a / r, b / r, lam * r ** n
        if b < 0 or (b == 0 and a < 0):
            a, b, lam = -a, -b, lam * (-1) ** n
        out.append((round(a, 9), round(b, 9), lam))
    return sorted(out)


def test_catalecticant_examples():
    assert catalecticant(SUM_OF_CUBES, 1).matrix == ((1, 0, 0), (0, 0, 1))
    cat = catalecticant(ROTATED, 1)
    assert cat.matrix == ((1, 0, -1), (0, -1, 0))
    assert cat.rank == 2
    for k in (1, 2, 3):
        assert catalecticant(parse_form("x^4"), k).rank == 1
    with pytest.raises(ValueError):
        catalecticant(ROTATED, 3)


@pytest.mark.parametrize("text, rank", [("x^5", 1), ("x^3 + y^3", 2), ("x^3 - 3*x*y^2", 2), ("x^4*y", 5)])
def test_complex_rank_examples(text, rank):
    assert complex_rank(parse_form(text)) == rank


def test_apolar_slice_examples():
    assert apolar_slice(ROTATED, 2) == [parse_form("x^2 + y^2")]
    three = apolar_slice(ROTATED, 3)
    assert len(three) == 3
    # 3x^2y - y^3 lies in the span
    target = parse_form("3*x^2*y - y^3")
    rows = [list(g.coeffs) for g in three] + [list(target.coeffs)]
    assert len(nullspace([list(col) for col in zip(*rows)])) == 1
    assert apolar_slice(parse_form("x^4"), 1) == [parse_form("y")]


def test_apolar_slice_annihilates():
    rng = np.random.default_rng(31)
    for n in range(2, 8):
        f = random_int_form(rng, n)
        for r in range(1, n + 1):
            for g in apolar_slice(f, r):
                assert apply_differential(g, f).is_zero()


def test_apply_differential_oracle():
    x, y = sympy.symbols("x y")
    f = parse_form("x^3 - 3*x*y^2")
    g = parse_form("x*y")
    expected = sympy.diff(x ** 3 - 3 * x * y ** 2, x, y)
    assert apply_differential(g, f) == parse_form(str(sympy.expand(expected)).replace("**", "^"))


def test_decompose_rotated_cubic_numerically():
    dec = decompose_from_apolar(ROTATED, parse_form("3*x^2*y - y^3"))
    assert not dec.exact
    assert dec.residual(ROTATED) <= 1e-8
    s3 = math.sqrt(3)
    # (4/3) x^3 - (1/6)(x + sqrt3 y)^3 + (1/6)(-x + sqrt3 y)^3
    ref = normalized_terms(type(dec)(((4 / 3, (1.0, 0.0)), (-1 / 6, (1.0, s3)), (1 / 6, (-1.0, s3))), 3, False))
    got = normalized_terms(dec)
    for (a1, b1, l1), (a2, b2, l2) in zip(got, ref):
        assert (a1, b1) == pytest.approx((a2, b2), abs=1e-9)
        assert l1 == pytest.approx(l2, rel=1e-9)


def test_decompose_exact_examples():
    dec = decompose_from_apolar(SUM_OF_CUBES, parse_form("x*y"))
    assert dec.exact
    assert sorted(dec.terms) == [(1, (0, 1)), (1, (1, 0))]
    assert dec.residual(SUM_OF_CUBES) == 0
    dec = decompose_from_apolar(parse_form("x^5"), parse_form("y"))
    assert dec.terms == ((1, (1, 0)),)


def test_decompose_rejects_bad_generators():
    with pytest.raises(ApolarityError):
        decompose_from_apolar(SUM_OF_CUBES, parse_form("x^2"))  # not apolar
    with pytest.raises(ApolarityError):
        decompose_from_apolar(SUM_OF_CUBES, parse_form("x^2 + y^2"))  # also not apolar
    with pytest.raises(ApolarityError, match="real roots"):
        decompose_from_apolar(ROTATED, parse_form("x^2 + y^2"))  # apolar, but no real roots


def test_real_rank_fixtures():
    cert = real_rank(ROTATED)
    assert (cert.real_exact, cert.complex_exact) == (3, 2)
    cert = real_rank(SUM_OF_CUBES)
    assert (cert.real_exact, cert.complex_exact) == (2, 2)
    assert cert.witness.residual(SUM_OF_CUBES) <= 1e-8
    assert real_rank(parse_form("x*y*(x + y)*(x - y)")).real_exact == 4
    for n in (3, 4, 5):
        f = BinaryForm.from_roots(range(n))
        cert = real_rank(f)
        assert cert.real_exact == n
        assert cert.witness.residual(f) <= 1e-8


def test_real_rank_rejects_repeated_roots():
    with pytest.raises(NotSquarefreeError):
        real_rank(parse_form("x^4"))
    assert complex_rank(parse_form("x^4")) == 1


def _check_certificate(f, cert):
    n = f.degree
    assert cert.complex_lower <= cert.real_lower <= cert.real_upper <= n
    assert cert.real_lower >= catalecticant_bound(f)
    lows = [lo for lo, _ in cert.history]
    highs = [hi for _, hi in cert.history]
    assert lows == sorted(lows)
    assert highs == sorted(highs, reverse=True)
    if cert.witness is not None:
        assert len(cert.witness.terms) == cert.real_upper
        assert cert.witness.residual(f) <= 1e-8


def test_certificates_are_sound_and_monotone():
    rng = np.random.default_rng(32)
    for n in range(3, 8):
        for _ in range(6):
            f = random_gaussian_form(rng, n)
            _check_certificate(f, real_rank(f, SearchBudget(max_candidates=200)))


def test_corollary_consistency():
    rng = np.random.default_rng(33)
    for n in range(3, 7):
        for i in range(10):
            f = random_real_rooted(rng, n) if i % 2 else random_gaussian_form(rng, n)
            cert = real_rank(f, SearchBudget(max_candidates=200))
            all_real = has_n_distinct_real_roots(f)
            if cert.real_exact is not None:
                assert (cert.real_exact == n) == all_real
            else:
                assert not all_real and cert.real_upper < n


def test_square_free_cubics_have_complex_rank_two():
    rng = np.random.default_rng(34)
    for _ in range(50):
        assert complex_rank(random_int_form(rng, 3)) == 2


def test_rank_invariant_under_coordinate_change():
    rng = np.random.default_rng(35)
    mats = [((1, 1), (0, 1)), ((2, -1), (1, 3)), ((0, 1), (1, 0))]
    for n in (3, 4, 5):
        for m in mats:
            top = random_real_rooted(rng, n)
            low = random_gaussian_form(rng, n)
            for f in (top, low):
                a = real_rank(f, SearchBudget(max_candidates=200))
                b = real_rank(change_coordinates(f, m), SearchBudget(max_candidates=200))
                assert complex_rank(f) == complex_rank(change_coordinates(f, m))
                if a.real_exact == n or b.real_exact == n:
                    assert a.real_exact == b.real_exact


@given(forms(min_degree=2, max_degree=6))
def test_catalecticant_bound_is_a_lower_bound_for_complex_rank(f):
    rank = complex_rank(f)
    assert catalecticant_bound(f) <= rank <= f.degree + 1


def test_search_budget_round_trip():
    b = SearchBudget(max_candidates=7, grid_bound=2, grid_mesh=Fraction(1, 3), seed=9)
    assert SearchBudget.from_dict(b.to_dict()) == b


def test_search_is_deterministic():
    rng = np.random.default_rng(36)
    f = random_gaussian_form(rng, 5)
    budget = SearchBudget(max_candidates=100, seed=4)
    assert real_rank(f, budget).to_dict() == real_rank(f, budget).to_dict()
