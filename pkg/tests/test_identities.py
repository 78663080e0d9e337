import math

import pytest

from hyperpow import (
    ConvergenceControl,
    DomainError,
    PoleError,
    run_samples,
    verify_eq1,
    verify_eq2,
    verify_eq5,
    verify_eq8,
    verify_eq9,
    verify_eq10,
    verify_eq11,
    verify_eq12,
)
from hyperpow.identities import DEFAULT_SAMPLES, TOLERANCES, _report, nested_eq2

# mpmath, 40 digits
EQ9 = {0.3: -9.2219404472260505929, 0.7: -8.16837982596757256, 1.25: 2.9799051908260938404}
EQ10 = {0.15: -19.271411086180968952, 0.3: -18.418898865453051784, 0.65: 18.969595881728614436}
EQ12 = {0.75: -2.1809699954982202094, 1.0: -0.64032191766063239642,
        1.25: -0.23919338078671244554}
F2_075 = {0.5: 1.75434113457079901, -0.5: 0.6987285836332398977}
EQ11_LHS = {(0.75, 0.5): 2.1388667135370971334, (0.6, -0.5): 0.59705609990658184347}


@pytest.fixture(scope="module")
def sample_reports():
    return run_samples()


def test_default_samples_all_pass(sample_reports):
    assert len(sample_reports) == sum(len(v) for v in DEFAULT_SAMPLES.values())
    bad = [(r.identity_id, r.parameters, r.rel_residual) for r in sample_reports if not r.passed]
    assert not bad


def test_report_invariants(sample_reports):
    for r in sample_reports:
        assert r.abs_residual == abs(r.lhs - r.rhs)
        scale = max(abs(r.lhs), abs(r.rhs))
        assert r.rel_residual == pytest.approx(r.abs_residual / scale, rel=1e-15)
        assert r.passed == (r.rel_residual <= TOLERANCES[r.identity_id])
        assert r.terms_used > 0
        d = r.to_dict()
        assert set(d) == {"identity", "params", "lhs", "rhs", "abs_residual", "rel_residual",
                          "terms_used", "pass", "notes"}


def test_eq1_trivial():
    r = verify_eq1(0.5, 0)
    assert r.lhs == 4.0 and r.rhs == 4.0 and r.passed


def test_eq1_reference():
    assert verify_eq1(0.3, 50).lhs == pytest.approx(53.646122932362237727, rel=1e-13)


def test_eq2_depth_two_is_eq1():
    for a, k in [(0.3, 7), (1.25, 30)]:
        r1, r2 = verify_eq1(a, k), verify_eq2(a, k, 2)
        assert r2.lhs == pytest.approx(r1.lhs, rel=1e-13)
        assert r2.rhs == pytest.approx(r1.rhs, rel=1e-13)


def test_eq2_nested_oracle_note():
    r = verify_eq2(0.5, 6, 3)
    assert "oracle agrees" in r.notes
    bl, br = nested_eq2(0.5, 6, 3)
    assert bl == pytest.approx(r.lhs, rel=1e-12) and br == pytest.approx(r.rhs, rel=1e-12)


def test_eq5_samples():
    for a, k, n in [(0.5, 20, 3), (1.25, 0, 1)]:
        assert verify_eq5(a, k, n).passed


def test_eq8_values():
    for x, ref in F2_075.items():
        r = verify_eq8(0.75, x)
        assert r.lhs == pytest.approx(ref, rel=1e-11)
        assert r.rhs == pytest.approx(ref, rel=1e-8)
    r = verify_eq8(0.5, -1.0)
    assert r.rhs == pytest.approx((math.pi / 4) ** 2, rel=1e-8)


def test_eq8_cap_doubling_within_tail():
    a = verify_eq8(0.75, 0.5, l_cap=1024)
    b = verify_eq8(0.75, 0.5, l_cap=2048)
    assert abs(a.rhs - b.rhs) <= a.tail_estimate


def test_eq8_small_cap_reports_nonconvergence():
    from hyperpow import ConvergenceError

    with pytest.raises(ConvergenceError):
        verify_eq8(0.75, 0.9, l_cap=16)


def test_eq11_values():
    for (a, x), ref in EQ11_LHS.items():
        r = verify_eq11(a, x)
        assert r.lhs == pytest.approx(ref, rel=1e-12)
        assert r.passed
    assert verify_eq11(0.75, 0.0).rhs == pytest.approx(1.0, rel=1e-8)


def test_eq11_rejects_unit_circle():
    with pytest.raises(DomainError):
        verify_eq11(0.75, -1.0)


@pytest.mark.parametrize("alpha", sorted(EQ9))
def test_eq9_values(alpha):
    r = verify_eq9(alpha)
    assert r.rhs == pytest.approx(EQ9[alpha], rel=1e-13)
    assert r.lhs == pytest.approx(EQ9[alpha], rel=1e-6)


@pytest.mark.parametrize("q", sorted(EQ10))
def test_eq10_values(q):
    r = verify_eq10(q)
    assert r.rhs == pytest.approx(EQ10[q], rel=1e-13)
    assert r.lhs == pytest.approx(EQ10[q], rel=1e-6)


@pytest.mark.parametrize("q", sorted(EQ12))
def test_eq12_values(q):
    r = verify_eq12(q)
    assert r.rhs == pytest.approx(EQ12[q], rel=1e-12)
    assert r.lhs == pytest.approx(EQ12[q], rel=1e-9)


def test_eq12_q1_note():
    assert "closed form" in verify_eq12(1.0).notes


def test_tighter_control_tightens_eq9():
    loose = verify_eq9(0.7)
    tight = verify_eq9(0.7, ConvergenceControl(tolerance=1e-13))
    assert tight.rel_residual <= max(loose.rel_residual, 1e-12)


def test_failure_diagnostics():
    r = _report("eq9", {"alpha": 0.3}, 1.0, -1.0, 5)
    assert not r.passed and "sign flip" in r.notes
    r = _report("eq9", {"alpha": 0.3}, 1.5, 1.0, 5)
    assert not r.passed and "lhs / rhs = 1.5" in r.notes


def test_nonfinite_side_is_not_reported_as_value():
    with pytest.raises(ArithmeticError):
        _report("eq1", {}, math.nan, 1.0, 1)


def test_pole_messages_explain():
    with pytest.raises(PoleError, match="2\\*alpha - 1"):
        verify_eq11(0.5, 0.2)
    with pytest.raises(PoleError, match="alpha - 1/2"):
        verify_eq9(0.5)
    with pytest.raises(PoleError, match="1/4"):
        verify_eq10(1.0)
