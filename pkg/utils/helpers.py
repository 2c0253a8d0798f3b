"""
Utility helper functions for xx_entropy
"""
import json
import math
from typing import Any, List, Optional


def format_number(value: Optional[float], digits: int = 12) -> str:
    """Fixed significant-digit rendering; None becomes an empty field"""
    if value is None:
        return ""
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.{digits}g}"


def round_significant(value: Optional[float], digits: int = 12) -> Optional[float]:
    """Round to the same digits format_number prints"""
    if value is None:
        return None
    return float(format_number(value, digits))


def safe_json_dumps(data: Any, indent: int = 2) -> str:
    """Safely serialize to JSON"""
    try:
        return json.dumps(data, indent=indent, default=str)
    except (TypeError, ValueError) as e:
        return json.dumps({"error": str(e), "data_type": str(type(data))})


def parse_number_list(text: str, cast=float) -> List[Any]:
    """
    Parse a comma separated list of numbers
    Example: "100,200,400" -> [100, 200, 400]
    """
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return [cast(p) for p in parts]


def format_duration(seconds: float) -> str:
    """Format duration in human-readable format"""
    if seconds < 1:
        return f"{seconds*1000:.0f}ms"
    elif seconds < 60:
        return f"{seconds:.1f}s"
    else:
        minutes = int(seconds // 60)
        secs = int(seconds % 60)
        return f"{minutes}m {secs}s"
