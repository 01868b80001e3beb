"""Tabulate qubits and gate counts of V_P against the main-register width.

    python scripts/gate_scaling.py --max-qubits 10
"""

import argparse
import json
from dataclasses import asdict, dataclass

from qcirculant.qsim import gate_counts
from qcirculant.shift_circuits import v_p_sections


@dataclass
class Config:
    min_qubits: int = 1
    max_qubits: int = 8
    json: bool = False


def run(cfg: Config) -> list[dict]:
    rows = []
    for q in range(cfg.min_qubits, cfg.max_qubits + 1):
        inv, band, fwd = (gate_counts(c) for c in v_p_sections(q))
        total = inv + band + fwd
        rows.append({
            "q": q,
            "n": 1 << q,
            "qubits": total.num_qubits,
            "central_cp": band.controlled_phase,
            "qft_gates": fwd.total,
            "total_gates": total.total,
            "total_over_q2": round(total.total / q**2, 4),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-qubits", type=int, default=Config.min_qubits)
    ap.add_argument("--max-qubits", type=int, default=Config.max_qubits)
    ap.add_argument("--json", action="store_true")
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    cols = list(rows[0])
    print("  ".join(f"{c:>13}" for c in cols))
    for r in rows:
        print("  ".join(f"{r[c]:>13}" for c in cols))


if __name__ == "__main__":
    main()
