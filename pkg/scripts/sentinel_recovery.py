"""Empirical success rate of sentinel-order recovery versus shots and boost.

For each (boost, shots) pair, sample the rotation state of TEXT over many
seeds and report how often the per-block argmax reproduces the exact
sentinel positions.

    python scripts/sentinel_recovery.py --text 'aab$' --trials 200
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

from qcirculant.strings import DecodingError, decode_blocks, encode, reconstruct_sentinels, rotation_state, sample


@dataclass
class Config:
    text: str = "aab$"
    boosts: list[float] = field(default_factory=lambda: [1.0, 2.5, 4.0, 8.0])
    shots: list[int] = field(default_factory=lambda: [16, 64, 256, 1024])
    trials: int = 200
    seed: int = 0


def success_rate(text: str, boost: float, shots: int, trials: int, seed: int) -> float:
    enc = encode(text, boost)
    state = rotation_state(enc)
    truth = decode_blocks(state, enc).sentinel_pos
    hits = 0
    for t in range(trials):
        try:
            hits += reconstruct_sentinels(sample(state, shots, seed + t), enc) == truth
        except DecodingError:
            pass
    return hits / trials


def run(cfg: Config) -> list[dict]:
    rows = []
    for boost in cfg.boosts:
        try:
            encode(cfg.text, boost)
        except ValueError as exc:
            print(f"skipping boost {boost}: {exc}")
            continue
        for shots in cfg.shots:
            rate = success_rate(cfg.text, boost, shots, cfg.trials, cfg.seed)
            rows.append({"boost": boost, "shots": shots, "success_rate": rate})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--text", default=Config.text)
    ap.add_argument("--boosts", type=float, nargs="+")
    ap.add_argument("--shots", type=int, nargs="+")
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(text=args.text, trials=args.trials, seed=args.seed)
    if args.boosts:
        cfg.boosts = args.boosts
    if args.shots:
        cfg.shots = args.shots
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
    else:
        for r in rows:
            print(f"boost={r['boost']:<6g} shots={r['shots']:<6d} success={r['success_rate']:.3f}")


if __name__ == "__main__":
    main()
