import pytest

from interfaces.runner import run_validate
from validation import (
    BaseCheck, CheckLevel, CheckRegistry, CheckResult, ValidationReport, register_default_checks,
    registry
)
from validation.checks import (
    OracleEqualityCheck, RouteEquivalenceCheck, ScalingCollapseCheck, SpectrumInterlacingCheck,
    SpectrumSumRuleCheck, UpsilonValueCheck
)
from utils import DomainError


class _Measured(BaseCheck):
    name = "measured"
    description = "returns a fixed deviation"

    def __init__(self, measured):
        self.measured = measured
        super().__init__()

    def execute(self, level):
        return self.result(self.measured, 1e-3)


class _Broken(BaseCheck):
    name = "broken"
    description = "raises"

    def execute(self, level):
        raise RuntimeError("boom")


class _FullOnly(_Measured):
    name = "full_only"
    level = CheckLevel.FULL


def test_check_passes_below_tolerance():
    outcome = _Measured(1e-4).run()
    assert outcome.passed
    assert outcome.elapsed >= 0.0
    assert outcome.summary_line().startswith("[PASS] measured")


def test_check_fails_at_tolerance():
    assert not _Measured(1e-3).run().passed


def test_exception_becomes_failure():
    outcome = _Broken().run()
    assert not outcome.passed
    assert "RuntimeError: boom" in outcome.detail


def test_level_parse():
    assert CheckLevel.parse("FULL") == CheckLevel.FULL
    with pytest.raises(DomainError):
        CheckLevel.parse("medium")


def test_registry_levels():
    local = CheckRegistry()
    local.register(_Measured(0.0))
    local.register(_FullOnly(0.0))
    assert local.list_checks(CheckLevel.FAST) == ["measured"]
    assert local.list_checks(CheckLevel.FULL) == ["measured", "full_only"]

    report = local.run_level(CheckLevel.FAST)
    assert report.passed
    assert len(report.results) == 1


def test_registry_report_collects_failures():
    local = CheckRegistry()
    local.register(_Measured(0.0))
    local.register(_Broken())
    report = local.run_level(CheckLevel.FAST)
    assert not report.passed
    assert [r.name for r in report.failures] == ["broken"]
    assert report.render().endswith("1/2 checks passed")
    assert report.to_dict()["passed"] is False


def test_missing_check():
    outcome = CheckRegistry().run_check("nope")
    assert not outcome.passed
    assert outcome.detail == "check not found"


def test_unregister():
    local = CheckRegistry()
    local.register(_Measured(0.0))
    local.unregister("measured")
    assert local.get_check("measured") is None


def test_report_serialises():
    report = ValidationReport(level=CheckLevel.FAST, results=[CheckResult(name="x", passed=True)])
    assert report.to_dict() == {
        "level": "fast",
        "passed": True,
        "results": [{"name": "x", "passed": True, "measured": None, "tolerance": None,
                     "detail": "", "elapsed": 0.0, "metadata": {}}],
    }


def test_default_checks_registered():
    register_default_checks()
    names = registry.list_checks()
    for expected in ("upsilon1_value", "spectrum_sum_rule", "route_equivalence",
                     "oracle_equality", "fh_ratio_convergence", "constant_term_law"):
        assert expected in names


def test_extrapolation_check_runs_only_at_full_level():
    register_default_checks()
    assert registry.get_check("constant_term_extrapolation").level == CheckLevel.FULL
    assert "constant_term_extrapolation" not in registry.list_checks(CheckLevel.FAST)
    assert "constant_term_extrapolation" in registry.list_checks(CheckLevel.FULL)
    assert "constant_term_law" in registry.list_checks(CheckLevel.FAST)


@pytest.mark.parametrize('check', [
    UpsilonValueCheck, SpectrumSumRuleCheck, SpectrumInterlacingCheck,
    RouteEquivalenceCheck, OracleEqualityCheck, ScalingCollapseCheck,
])
def test_default_check_passes_fast(check):
    outcome = check().run(CheckLevel.FAST)
    assert outcome.passed, outcome.detail


@pytest.mark.slow
def test_fast_suite_passes():
    assert run_validate("fast").passed


@pytest.mark.slow
def test_full_suite_passes():
    assert run_validate("full").passed
