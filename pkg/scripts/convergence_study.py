"""Richardson study of the constant term S(L) - ln(Lsc)/3 -> Y1"""
import argparse
import json
import math
import time
from pathlib import Path

from app_config import config
from core.asymptotics import leading_coefficient, upsilon_alpha, richardson_extrapolate
from core.entropy import EntropyKind, exact_entropy
from core.model import ModelParams
from utils import get_logger, parse_number_list, format_duration


logger = get_logger("scripts.convergence_study", config.log_file, config.log_level)


def constant_term_study(h: float, lengths, alpha: float = 1.0, order: float = 2.0) -> dict:
    """Offsets S(L) - c ln Lsc per length and their extrapolated limit"""
    kind = EntropyKind.VON_NEUMANN if alpha == 1.0 else EntropyKind.RENYI
    offsets = []
    for L in lengths:
        params = ModelParams(h=h, L=L)
        value = exact_entropy(params, alpha, kind).value
        offsets.append(value - leading_coefficient(alpha) * math.log(params.scaled_length))
        logger.info("Offset computed", L=L, offset=offsets[-1])

    target = upsilon_alpha(alpha)
    limit = richardson_extrapolate(lengths, offsets, order=order)
    return {
        "h": h,
        "alpha": alpha,
        "lengths": list(lengths),
        "offsets": offsets,
        "extrapolated": limit,
        "constant": target,
        "deviation": abs(limit - target),
    }


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--h", type=float, default=0.0)
    ap.add_argument("--alpha", type=float, default=1.0)
    ap.add_argument("--lengths", default="250,500,1000", help="Geometric block lengths")
    ap.add_argument("--order", type=float, default=2.0, help="Assumed decay power of the correction")
    ap.add_argument("--out", default="convergence_study.json")
    args = ap.parse_args()

    start = time.perf_counter()
    study = constant_term_study(args.h, parse_number_list(args.lengths, int), args.alpha, args.order)
    study["elapsed"] = format_duration(time.perf_counter() - start)

    out = Path(args.out).expanduser()
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(study, indent=2, sort_keys=True), encoding="utf-8")
    logger.info(f"Wrote {out}", deviation=study["deviation"])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
