"""
Check registry for the validation suites
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Any

from validation.base_check import BaseCheck, CheckLevel, CheckResult
from utils import get_logger
from app_config import config


logger = get_logger(__name__, config.log_file, config.log_level)


@dataclass
class ValidationReport:
    level: CheckLevel
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "level": self.level.value,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }

    def render(self) -> str:
        lines = [r.summary_line() for r in self.results]
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed")
        return "\n".join(lines)


class CheckRegistry:
    """Registry for managing and running checks"""

    def __init__(self):
        self.checks: Dict[str, BaseCheck] = {}

    def register(self, check: BaseCheck):
        self.checks[check.name] = check
        logger.debug(f"Registered check: {check.name}")

    def unregister(self, name: str):
        self.checks.pop(name, None)

    def get_check(self, name: str) -> Optional[BaseCheck]:
        return self.checks.get(name)

    def list_checks(self, level: Optional[CheckLevel] = None) -> List[str]:
        """Names of checks that run at the given level, all names if None"""
        if level is None:
            return list(self.checks.keys())
        return [name for name, check in self.checks.items()
                if level == CheckLevel.FULL or check.level == CheckLevel.FAST]

    def run_check(self, name: str, level: CheckLevel = CheckLevel.FAST) -> CheckResult:
        check = self.get_check(name)
        if not check:
            logger.error(f"Check not found: {name}")
            return CheckResult(name=name, passed=False, detail="check not found")
        return check.run(level)

    def run_level(self, level: CheckLevel) -> ValidationReport:
        """Run every check for the level in registration order"""
        report = ValidationReport(level=level)
        for name in self.list_checks(level):
            report.results.append(self.checks[name].run(level))
        logger.info("Validation finished", level=level.value,
                    passed=len(report.results) - len(report.failures), total=len(report.results))
        return report


# Global registry instance
registry = CheckRegistry()


def register_default_checks():
    """Register all default checks"""
    from validation.checks import (
        UpsilonValueCheck, UpsilonDualRouteCheck, UpsilonAlphaContinuityCheck,
        SpectrumSumRuleCheck, SpectrumInterlacingCheck, RouteEquivalenceCheck,
        OracleEqualityCheck, DeterminantRatioCheck, ConstantTermCheck,
        ConstantTermExtrapolationCheck, ScalingCollapseCheck
    )

    for check in (UpsilonValueCheck(), UpsilonDualRouteCheck(), UpsilonAlphaContinuityCheck(),
                  SpectrumSumRuleCheck(), SpectrumInterlacingCheck(), RouteEquivalenceCheck(),
                  OracleEqualityCheck(), DeterminantRatioCheck(), ConstantTermCheck(),
                  ConstantTermExtrapolationCheck(), ScalingCollapseCheck()):
        registry.register(check)

    logger.info(f"Registered {len(registry.checks)} default checks")
