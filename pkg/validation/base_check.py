"""
Base check interface for xx_entropy validation
"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from utils import get_logger, format_duration
from app_config import config


class CheckLevel(str, Enum):
    FAST = "fast"
    FULL = "full"

    @classmethod
    def parse(cls, text: str) -> "CheckLevel":
        try:
            return cls(text.lower())
        except ValueError:
            from utils import DomainError
            raise DomainError(f"Unknown validation level: {text}")


@dataclass
class CheckResult:
    """Outcome of one invariant check"""
    name: str
    passed: bool
    measured: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""
    elapsed: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "detail": self.detail,
            "elapsed": self.elapsed,
            "metadata": self.metadata,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        numbers = ""
        if self.measured is not None:
            numbers = f" measured={self.measured:.3e}"
            if self.tolerance is not None:
                numbers += f" tol={self.tolerance:.1e}"
        return f"[{status}] {self.name}{numbers} ({format_duration(self.elapsed)}) {self.detail}".rstrip()


class BaseCheck(ABC):
    """Abstract base class for all validation checks"""

    # FULL checks run only at the full level; FAST checks run at both
    level: CheckLevel = CheckLevel.FAST

    def __init__(self):
        self.logger = get_logger(f"check.{self.name}", config.log_file, config.log_level)

    @property
    @abstractmethod
    def name(self) -> str:
        """Check name"""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """What invariant the check asserts"""
        pass

    @abstractmethod
    def execute(self, level: CheckLevel) -> CheckResult:
        """
        Evaluate the invariant

        Args:
            level: FULL checks may widen their grids

        Returns:
            CheckResult with the worst measured deviation
        """
        pass

    def result(self, measured: float, tolerance: float, detail: str = "", **metadata) -> CheckResult:
        """Pass iff measured < tolerance"""
        return CheckResult(name=self.name, passed=bool(measured < tolerance), measured=float(measured),
                           tolerance=tolerance, detail=detail, metadata=metadata)

    def run(self, level: CheckLevel = CheckLevel.FAST) -> CheckResult:
        """Run with timing and logging; an exception counts as a failure"""
        start = time.perf_counter()
        try:
            outcome = self.execute(level)
        except Exception as e:
            self.logger.error(f"Exception in check: {e}")
            outcome = CheckResult(name=self.name, passed=False,
                                  detail=f"{type(e).__name__}: {e}")
        outcome.elapsed = time.perf_counter() - start

        if outcome.passed:
            self.logger.info("Check passed", measured=outcome.measured, tolerance=outcome.tolerance)
        else:
            self.logger.error("Check failed", measured=outcome.measured,
                              tolerance=outcome.tolerance, detail=outcome.detail)
        return outcome

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: {self.name}>"
