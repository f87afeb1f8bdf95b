import math

import pytest

from ptcubic.audit import ZetaAudit, hybrid_sum, round_significant, run_audit
from ptcubic.closedform import wkb_zeta1, zeta1_exact


@pytest.fixture(scope="module")
def audit5():
    return run_audit(5, digits=5)


def discrepancy(spectrum20, n):
    return hybrid_sum([e.energy.real for e in spectrum20[:n]]) - zeta1_exact()


def test_audit_record(audit5):
    assert isinstance(audit5, ZetaAudit)
    assert audit5.n_numeric == 5 and audit5.digits == 5
    assert audit5.closed_form == zeta1_exact()
    assert audit5.wkb_sum == wkb_zeta1()
    assert abs(audit5.quadrature_value - audit5.closed_form) <= 1e-6
    assert audit5.discrepancy == audit5.hybrid_sum - audit5.closed_form
    assert audit5.pair_bound == abs(audit5.discrepancy)
    assert audit5.pair_bound_per_member == abs(audit5.discrepancy) / 2
    assert all(e == round_significant(e, 5) for e in audit5.energies)


def test_reproduction_with_five_digit_eigenvalues(audit5):
    assert round(audit5.hybrid_sum, 4) == pytest.approx(2.8351, abs=1e-12)


def test_without_numeric_terms_the_hybrid_is_the_wkb_sum():
    assert hybrid_sum([]) == pytest.approx(wkb_zeta1(), abs=1e-15)
    assert hybrid_sum([]) == pytest.approx(2.885673793, abs=1e-9)


def test_monotone_improvement(spectrum20):
    values = {n: abs(discrepancy(spectrum20, n)) for n in (5, 10, 15, 20)}
    for n in (5, 10, 15):
        assert values[n + 5] <= values[n] + 1e-9
    assert values[10] < values[5]


def test_discrepancy_is_positive(spectrum20):
    # each WKB term overshoots 1/E_j, so the hybrid sum stays above the exact value
    for n in (5, 10, 15, 20):
        assert discrepancy(spectrum20, n) > 0


def test_per_member_pair_bound(spectrum20):
    for n in (10, 15, 20):
        assert abs(discrepancy(spectrum20, n)) / 2 < 1e-5


def test_total_pair_bound_once_fifteen_levels_are_numeric(spectrum20):
    for n in (15, 20):
        assert abs(discrepancy(spectrum20, n)) < 1e-5


def test_round_significant():
    assert round_significant(1.15626707, 5) == 1.1563
    assert round_significant(15.291553, 5) == 15.292
    with pytest.raises(ValueError):
        round_significant(1.0, 0)


def test_run_audit_rejects_empty_request():
    with pytest.raises(ValueError):
        run_audit(0)


def test_quadrature_can_be_skipped():
    audit = run_audit(1, quadrature=False)
    assert math.isnan(audit.quadrature_value)
    assert audit.energies[0] == pytest.approx(1.15627, abs=1e-5)
