"""
Row production for the command-line front end

A row combines the exact entropy with the closed-form prediction for its
regime. Scans run rows on a thread pool and emit them in canonical
(L, h, alpha) order, so output does not depend on the worker count.
"""
import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, TextIO

from app_config import config
from core.asymptotics import (
    AsymptoticPrediction, Regime, large_block_entropy, small_block_entropy, upsilon_alpha
)
from core.entropy import EntropyKind, exact_entropy
from core.model import ModelParams, CRITICAL_FIELD
from utils import get_logger, DomainError, EntropyError, format_number, round_significant


logger = get_logger(__name__, config.log_file, config.log_level)

CSV_COLUMNS = ("L", "h", "alpha", "scaled_length", "s_exact", "s_asymptotic",
               "s_small_block", "residual", "regime")
OUTPUT_KINDS = frozenset({"exact", "asymptotic", "small_block", "residual"})


@dataclass(frozen=True)
class ScanSpec:
    """Cartesian grid of block lengths, fields and entropy indices"""
    lengths: List[int]
    fields_h: List[float]
    alphas: List[float]
    outputs: FrozenSet[str] = OUTPUT_KINDS
    kind: EntropyKind = EntropyKind.VON_NEUMANN

    def __post_init__(self):
        if not self.lengths or not self.fields_h or not self.alphas:
            raise DomainError("Scan needs non-empty lengths, fields and alphas")
        if any(int(L) != L or L < 1 for L in self.lengths):
            raise DomainError(f"Lengths must be positive integers, got {self.lengths}")
        if any(not (abs(h) < CRITICAL_FIELD) for h in self.fields_h):
            raise DomainError(f"Scan fields must lie in (-2, 2), got {self.fields_h}")
        if any(not (a > 0.0) or not math.isfinite(a) for a in self.alphas):
            raise DomainError(f"Alphas must be positive, got {self.alphas}")
        unknown = set(self.outputs) - OUTPUT_KINDS
        if unknown or not self.outputs:
            raise DomainError(f"Unknown outputs: {sorted(unknown)}")
        object.__setattr__(self, "outputs", frozenset(self.outputs))

    def points(self) -> List[tuple]:
        """(L, h, alpha) in lexicographic order, duplicates removed"""
        alphas = [1.0] if self.kind == EntropyKind.VON_NEUMANN else self.alphas
        grid = product(sorted({int(L) for L in self.lengths}),
                       sorted({float(h) + 0.0 for h in self.fields_h}),
                       sorted({float(a) for a in alphas}))
        return list(grid)


@dataclass
class OutputRow:
    L: int
    h: float
    alpha: float
    scaled_length: Optional[float]
    s_exact: Optional[float]
    s_asymptotic: Optional[float]
    s_small_block: Optional[float]
    residual: Optional[float]
    regime: str
    error: Optional[str] = None

    def mask(self, outputs: FrozenSet[str]) -> "OutputRow":
        """Blank the columns not requested"""
        return OutputRow(
            L=self.L, h=self.h, alpha=self.alpha, scaled_length=self.scaled_length,
            s_exact=self.s_exact if "exact" in outputs else None,
            s_asymptotic=self.s_asymptotic if "asymptotic" in outputs else None,
            s_small_block=self.s_small_block if "small_block" in outputs else None,
            residual=self.residual if "residual" in outputs else None,
            regime=self.regime, error=self.error,
        )

    def to_dict(self) -> Dict[str, Any]:
        """Numbers rounded exactly as the CSV prints them"""
        digits = config.scan.significant_digits
        data: Dict[str, Any] = {
            "L": self.L,
            "h": round_significant(self.h, digits),
            "alpha": round_significant(self.alpha, digits),
            "scaled_length": round_significant(self.scaled_length, digits),
            "s_exact": round_significant(self.s_exact, digits),
            "s_asymptotic": round_significant(self.s_asymptotic, digits),
            "s_small_block": round_significant(self.s_small_block, digits),
            "residual": round_significant(self.residual, digits),
            "regime": self.regime,
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    def to_csv_fields(self) -> List[str]:
        digits = config.scan.significant_digits
        return [
            str(self.L),
            format_number(self.h, digits),
            format_number(self.alpha, digits),
            format_number(self.scaled_length, digits),
            format_number(self.s_exact, digits),
            format_number(self.s_asymptotic, digits),
            format_number(self.s_small_block, digits),
            format_number(self.residual, digits),
            self.regime,
        ]


def _reported(prediction: AsymptoticPrediction, kind: EntropyKind) -> float:
    return prediction.as_tsallis() if kind == EntropyKind.TSALLIS else prediction.value


def run_compute(params: ModelParams, alpha: float = 1.0,
                kind: EntropyKind = EntropyKind.VON_NEUMANN) -> OutputRow:
    """
    Exact entropy and the prediction of its regime for one point

    Each prediction is reported only inside its own regime: largeL for
    Lsc >= 1, smallL for 0 < Lsc < 1. Out of regime the large-block law can
    go negative, so its column stays blank there.
    """
    if kind == EntropyKind.VON_NEUMANN:
        alpha = 1.0
    report = exact_entropy(params, alpha, kind)
    lsc = params.scaled_length
    regime = Regime.LARGE if lsc >= 1.0 else Regime.SMALL

    s_asymptotic = None
    s_small = None
    if regime == Regime.LARGE:
        s_asymptotic = _reported(large_block_entropy(params, alpha), kind)
    elif lsc > 0.0:
        s_small = _reported(small_block_entropy(params, alpha), kind)

    prediction = s_asymptotic if regime == Regime.LARGE else s_small
    residual = None if prediction is None else report.value - prediction

    return OutputRow(L=params.L, h=params.h, alpha=alpha, scaled_length=lsc,
                     s_exact=report.value, s_asymptotic=s_asymptotic,
                     s_small_block=s_small, residual=residual, regime=regime.value)


def _error_row(L: int, h: float, alpha: float, error: Exception) -> OutputRow:
    return OutputRow(L=L, h=h, alpha=alpha, scaled_length=None, s_exact=None,
                     s_asymptotic=None, s_small_block=None, residual=None,
                     regime="", error=f"{type(error).__name__}: {error}")


def run_scan(spec: ScanSpec, workers: Optional[int] = None) -> Iterator[OutputRow]:
    """
    Rows for every grid point in canonical order

    Rows that fail carry an error message instead of values; the scan
    continues past them.
    """
    workers = workers or config.scan.workers
    points = spec.points()
    logger.info("Starting scan", points=len(points), workers=workers, kind=spec.kind.value)

    # one computation per constant before the pool starts
    for alpha in sorted({p[2] for p in points}):
        try:
            upsilon_alpha(alpha)
        except EntropyError as e:
            logger.warning("Constant unavailable", alpha=alpha, error=str(e))

    def compute(point) -> OutputRow:
        L, h, alpha = point
        try:
            return run_compute(ModelParams(h=h, L=L), alpha, spec.kind).mask(spec.outputs)
        except EntropyError as e:
            logger.error("Row failed", L=L, h=h, alpha=alpha, error=str(e))
            return _error_row(L, h, alpha, e)

    with logger.timed("Scan finished", points=len(points)):
        if workers <= 1:
            yield from map(compute, points)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                # map keeps submission order
                yield from pool.map(compute, points)


def write_csv(rows: Iterable[OutputRow], stream: TextIO):
    """Header then one line per row; rows carrying errors are left out"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        if row.error is not None:
            continue
        writer.writerow(row.to_csv_fields())


def write_json(rows: Iterable[OutputRow], stream: TextIO):
    """Array of row objects with the CSV field names"""
    payload = [row.to_dict() for row in rows]
    stream.write(json.dumps(payload, indent=2, allow_nan=True))
    stream.write("\n")


def render(rows: Iterable[OutputRow], fmt: str) -> str:
    buffer = io.StringIO()
    if fmt == "json":
        write_json(rows, buffer)
    else:
        write_csv(rows, buffer)
    return buffer.getvalue()


def run_validate(level: str = "fast"):
    """Run the registered checks for a level and return the report"""
    from validation import CheckLevel, registry, register_default_checks

    if not registry.checks:
        register_default_checks()
    return registry.run_level(CheckLevel.parse(level))
