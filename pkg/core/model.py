"""
Physical parameters of the XX chain in a transverse field

The field enters every formula through |h| only. Signed input is kept on the
value object for reporting; everything derived uses the magnitude.
"""
import math
from dataclasses import dataclass, field

from utils import DomainError

CRITICAL_FIELD = 2.0


def _check_field(h: float) -> float:
    if not math.isfinite(h):
        raise DomainError(f"Field must be finite, got {h}")
    magnitude = abs(h)
    if magnitude > CRITICAL_FIELD:
        raise DomainError(f"Field |h|={magnitude} outside critical window [0, 2]")
    return magnitude


def fermi_momentum(h: float) -> float:
    """k_F = arccos(|h|/2), in [0, pi/2]"""
    return math.acos(_check_field(h) / CRITICAL_FIELD)


def scaled_length(L: int, h: float) -> float:
    """The scaling variable 2 L sqrt(1 - (h/2)^2)"""
    if L < 1:
        raise DomainError(f"Block length must be >= 1, got {L}")
    magnitude = _check_field(h)
    return 2.0 * L * math.sqrt((1.0 - magnitude / CRITICAL_FIELD) * (1.0 + magnitude / CRITICAL_FIELD))


@dataclass(frozen=True)
class ModelParams:
    """Block length and field with their derived scales"""
    h: float
    L: int
    k_F: float = field(init=False)
    scaled_length: float = field(init=False)

    def __post_init__(self):
        if isinstance(self.L, bool) or int(self.L) != self.L:
            raise DomainError(f"Block length must be an integer, got {self.L}")
        # -0.0 and 0.0 must produce identical rows
        object.__setattr__(self, "h", float(self.h) + 0.0)
        object.__setattr__(self, "L", int(self.L))
        object.__setattr__(self, "k_F", fermi_momentum(self.h))
        object.__setattr__(self, "scaled_length", scaled_length(self.L, self.h))

    @property
    def abs_h(self) -> float:
        return abs(self.h)

    @property
    def k_F_reflected(self) -> float:
        """k_F folded into (0, pi/2]: k_F below pi/2, pi - k_F otherwise"""
        return self.k_F if self.k_F < math.pi / 2 else math.pi - self.k_F

    @property
    def at_critical_field(self) -> bool:
        """|h| = 2: the symbol loses its jump and the block entropy vanishes"""
        return self.abs_h == CRITICAL_FIELD
