from fractions import Fraction

import pytest

from oddtrace.characters import (
    SignAssignment,
    SignResolutionError,
    bgg_odd_trace,
    compare_series,
    resolve_signs,
    verify_bgg_equals_eta_cubed,
    verify_fermion_eta,
    verify_jacobi,
)
from oddtrace.qseries import FracPowerSeries, eta

F = Fraction
EIGHTH = F(1, 8)


def test_sign_assignment_validation():
    SignAssignment({-1: -1, 0: 1, 1: 1})
    with pytest.raises(ValueError):
        SignAssignment({0: 2})
    with pytest.raises(ValueError):
        SignAssignment({0: 1, 2: 1})  # gap at k=1


# ---------------------------------------------------------------------------
# bgg_odd_trace
# ---------------------------------------------------------------------------

def test_bgg_single_term():
    signs = SignAssignment({0: 1})
    s = bgg_odd_trace(EIGHTH + 1, signs)
    assert s.support() == [EIGHTH]
    assert s.coeff(EIGHTH) == F(1, 4)


def test_bgg_empty_window():
    s = bgg_odd_trace(F(1, 16), SignAssignment({}))
    assert s.is_zero()


def test_bgg_all_plus_magnitudes():
    signs = SignAssignment({k: 1 for k in range(-3, 3)})
    s = bgg_odd_trace(EIGHTH + 12, signs)
    expected = {EIGHTH: F(1, 4), EIGHTH + 1: F(3, 4), EIGHTH + 3: F(5, 4),
                EIGHTH + 6: F(7, 4), EIGHTH + 10: F(9, 4)}
    assert {e: s.coeff(e) for e in s.support()} == expected


def test_bgg_with_resolved_signs_matches_eta_cubed_quarter():
    order = EIGHTH + 12
    s = bgg_odd_trace(order, resolve_signs(order))
    target = (eta(12) ** 3) * F(1, 4)
    assert s.eq_to_order(target, order)


def test_bgg_requires_sign_coverage():
    with pytest.raises(ValueError, match="k=-1"):
        bgg_odd_trace(EIGHTH + 2, SignAssignment({0: 1}))


def test_bgg_support_matches_eta_cubed_to_200():
    order = F(200)
    s = bgg_odd_trace(order, resolve_signs(order))
    cube = eta(200) ** 3
    assert s.support() == [e for e in cube.support() if e < order]
    assert s.support() == sorted(EIGHTH + k * (2 * k + 1)
                                 for k in range(-10, 11)
                                 if k * (2 * k + 1) < order - EIGHTH)


# ---------------------------------------------------------------------------
# resolve_signs
# ---------------------------------------------------------------------------

def test_resolve_signs_smallest_windows():
    assert resolve_signs(F(1, 16)) == {}
    assert resolve_signs(EIGHTH) == {0: 1}
    assert resolve_signs(EIGHTH + 1) == {0: 1, -1: -1}


def test_resolve_signs_follow_sign_of_4k_plus_1():
    signs = resolve_signs(EIGHTH + 100)
    assert len(signs) == 14  # k = -7..6
    for k, s in signs.items():
        assert s * abs(4 * k + 1) == 4 * k + 1


def test_resolve_signs_window_stable():
    small = resolve_signs(EIGHTH + 10)
    big = resolve_signs(EIGHTH + 120)
    for k, s in small.items():
        assert big[k] == s


def test_resolve_signs_detects_impossible_target(monkeypatch):
    # Corrupt the leading-trace magnitude; resolution must refuse to fit it.
    from oddtrace import characters, pbw

    real = pbw.verma_leading_trace

    def corrupted(k, c, sign):
        e, v = real(k, c, sign)
        return e, v * 7
    monkeypatch.setattr(characters.pbw, "verma_leading_trace", corrupted)
    with pytest.raises(SignResolutionError):
        resolve_signs(EIGHTH + 1)


# ---------------------------------------------------------------------------
# verify_jacobi
# ---------------------------------------------------------------------------

def test_verify_jacobi_passes_to_100():
    report = verify_jacobi(100)
    assert report.passed and report.first_discrepancy is None
    assert report.order == 100


def test_verify_jacobi_two_coefficients():
    assert verify_jacobi(EIGHTH + 2).passed


def test_verify_jacobi_rejects_tiny_order():
    with pytest.raises(ValueError):
        verify_jacobi(F(1, 16))


def test_compare_reports_injected_fault_at_lowest_exponent():
    cube = eta(10) ** 3
    bad = cube + FracPowerSeries.monomial(EIGHTH, 1, cube.truncation)  # coeff 1 -> 2
    report = compare_series("perturbed", cube, bad, 5)
    assert not report.passed
    e, lhs, rhs = report.first_discrepancy
    assert e == EIGHTH and lhs == 1 and rhs == 2


def test_report_json_shape():
    data = verify_jacobi(20).to_json_dict()
    assert data == {
        "name": "jacobi-eta-cubed",
        "order": [20, 1],
        "pass": True,
        "first_discrepancy": None,
    }


# ---------------------------------------------------------------------------
# verify_fermion_eta
# ---------------------------------------------------------------------------

def test_verify_fermion_eta_30():
    assert verify_fermion_eta(30).passed


def test_verify_fermion_eta_level_one():
    assert verify_fermion_eta(1).passed


def test_verify_fermion_eta_validates():
    with pytest.raises(ValueError):
        verify_fermion_eta(0)


def test_fermion_fault_without_sign_fails_at_level_one():
    # Unsigned variant: every monomial contributes +1/2, so level N carries
    # the plain distinct-part count instead of the signed one.
    from oddtrace.pbw import enumerate_fermion_monomials

    terms = {}
    for n in range(6):
        terms[F(1, 24) + n] = F(len(enumerate_fermion_monomials(n)), 2)
    unsigned = FracPowerSeries.from_terms(terms, F(1, 24) + 6, denominator=24)
    report = compare_series("unsigned-fault", unsigned, eta(6), F(1, 24) + 6)
    assert not report.passed
    assert report.first_discrepancy[0] == F(1, 24) + 1


# ---------------------------------------------------------------------------
# verify_bgg_equals_eta_cubed
# ---------------------------------------------------------------------------

def test_verify_bgg_to_100():
    assert verify_bgg_equals_eta_cubed(100).passed


def test_verify_bgg_single_term_window():
    # Window covering only the k=0 exponent: compares 1/4 against 1/4.
    report = verify_bgg_equals_eta_cubed(EIGHTH + 1)
    assert report.passed


def test_verify_bgg_all_minus_fails_at_lowest_exponent():
    order = EIGHTH + 5
    all_minus = SignAssignment({k: -1 for k in range(-2, 3)})
    lhs = bgg_odd_trace(order, all_minus)
    target = (eta(6) ** 3) * F(1, 4)
    report = compare_series("all-minus", lhs, target, order)
    assert not report.passed
    assert report.first_discrepancy[0] == EIGHTH


def test_eta_cubed_magnitudes_recover_4k_plus_1():
    cube = eta(120) ** 3
    for e in cube.support():
        # recover k from the exponent offset m = k(2k+1)
        m = e - EIGHTH
        k = next(k for k in range(-8, 9) if k * (2 * k + 1) == m)
        assert abs(cube.coeff(e)) == abs(4 * k + 1)
