"""Command-line front end.

Exit status: 0 success, 1 verification or decoding failure, 2 usage error.
Floats are printed with 12 significant digits; complex numbers as ``[re, im]``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .qsim import GateCounts, StateVector, gate_counts, run_circuit
from .shift_circuits import v_p_circuit, v_p_dense, v_p_sections
from .sort_sim import blocks_from_text, odd_even_trace
from .strings import (
    PAD,
    DecodingError,
    SentinelError,
    bwt,
    bwt_from_rotations,
    cyclically_consistent,
    decode_blocks,
    encode,
    reconstruct_sentinels,
    rotation_state,
    sample,
    sort_key,
    suffix_array,
)
from .verification import random_complex, run_verification

PAD_DISPLAY = "·"
SIG_DIGITS = 12


class UsageError(Exception):
    pass


def round_sig(obj):
    """Recursively round floats (and complex, as ``[re, im]``) to 12 significant digits."""
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.{SIG_DIGITS}g}")
    if isinstance(obj, (complex, np.complexfloating)):
        return [round_sig(obj.real), round_sig(obj.imag)]
    if isinstance(obj, dict):
        return {k: round_sig(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_sig(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return round_sig(obj.tolist())
    return obj


def dumps(obj) -> str:
    return json.dumps(round_sig(obj), sort_keys=True)


def fmt(x: float) -> str:
    return f"{x:.{SIG_DIGITS}g}"


def show(s: str) -> str:
    return s.replace(PAD, PAD_DISPLAY)


def _emit(out, line: str = "") -> None:
    out.write(line + "\n")


def cmd_bwt(args, out) -> int:
    result = bwt(args.text)
    _emit(out, dumps({"text": args.text, "bwt": result}) if args.json else result)
    return 0


def cmd_suffix_array(args, out) -> int:
    sa = suffix_array(args.text)
    _emit(out, dumps({"text": args.text, "suffix_array": sa}) if args.json else " ".join(map(str, sa)))
    return 0


def cmd_rotations(args, out) -> int:
    enc = encode(args.text, args.boost)
    state = rotation_state(enc, args.method)
    dec = decode_blocks(state, enc)
    quantum = bwt_from_rotations(dec)
    classical = bwt(enc.padded_text)
    ok = quantum == classical and dec.is_consistent()
    if args.json:
        _emit(out, dumps({
            "text": enc.text,
            "padded_text": enc.padded_text,
            "n": enc.n,
            "boost": enc.boost,
            "codes": enc.codes.tolist(),
            "state": state.to_dict(),
            "blocks": list(dec.blocks),
            "sentinel_pos": list(dec.sentinel_pos),
            "bwt": quantum,
            "bwt_matches_classical": ok,
        }))
    else:
        _emit(out, f"n={enc.n} main_qubits={enc.num_qubits} total_qubits={state.num_qubits} boost={fmt(enc.boost)}")
        _emit(out, "codes: " + " ".join(fmt(c) for c in enc.codes))
        for j, (blk, pos) in enumerate(zip(dec.blocks, dec.sentinel_pos)):
            _emit(out, f"S_{j}: {show(blk)}  sentinel@{pos}")
        _emit(out, f"bwt (rotation path): {show(quantum)}")
        _emit(out, f"bwt (classical):     {show(classical)}")
    if not ok:
        print("error: rotation-path BWT disagrees with the classical oracle", file=sys.stderr)
        return 1
    return 0


def cmd_sample(args, out) -> int:
    enc = encode(args.text, args.boost)
    state = rotation_state(enc)
    hist = sample(state, args.shots, args.seed)
    try:
        positions = reconstruct_sentinels(hist, enc)
        error = None
    except DecodingError as exc:
        positions, error = None, str(exc)
    truth = decode_blocks(state, enc).sentinel_pos
    if args.json:
        _emit(out, dumps({
            "text": enc.text,
            "boost": enc.boost,
            "histogram": hist.to_dict(),
            "sentinel_pos": None if positions is None else list(positions),
            "consistent": positions is not None and cyclically_consistent(positions, enc.n),
            "matches_exact": positions is not None and tuple(positions) == truth,
        }))
    else:
        _emit(out, f"shots={hist.shots} seed={hist.seed} n={hist.n} boost={fmt(enc.boost)}")
        for j, row in enumerate(hist.counts):
            _emit(out, f"block {j}: " + " ".join(str(int(c)) for c in row))
        if positions is not None:
            _emit(out, "sentinel positions: " + " ".join("?" if p is None else str(p) for p in positions))
    if error is not None:
        print(f"error: {error}", file=sys.stderr)
        return 1
    return 0


def cmd_sort_rotations(args, out) -> int:
    blocks = blocks_from_text(args.text)
    trace = odd_even_trace(blocks, args.rounds)
    for r, snap in enumerate(trace, start=1):
        phase = "even" if (r - 1) % 2 == 0 else "odd"
        _emit(out, f"round {r} ({phase}): " + " ".join(show(b.key) for b in snap))
    final = trace[-1] if trace else blocks
    keys = [b.key for b in final]
    _emit(out, dumps({
        "rounds": len(trace),
        "order": [b.payload for b in final],
        "keys": keys,
        "last_column": "".join(k[-1] for k in keys),
        "sorted": keys == sorted(keys, key=sort_key),
    }))
    return 0


def _counts_row(name: str, c: GateCounts) -> list[str]:
    return [name, str(c.hadamard), str(c.phase), str(c.controlled_phase), str(c.swap), str(c.total)]


def cmd_gates(args, out) -> int:
    q = args.qubits
    if q < 1:
        raise UsageError("--qubits must be >= 1")
    inv, band, fwd = v_p_sections(q)
    sections = {
        "inverse_qft": gate_counts(inv),
        "central_band": gate_counts(band),
        "qft": gate_counts(fwd),
    }
    total = gate_counts(inv + band + fwd)
    if args.json:
        doc = {
            "main_qubits": q,
            "total_qubits": total.num_qubits,
            "central_controlled_phase": sections["central_band"].controlled_phase,
            "sections": {k: v.to_dict() for k, v in sections.items()},
            "total": total.to_dict(),
        }
        if args.circuit:
            doc["circuit"] = (inv + band + fwd).to_dict()
        _emit(out, dumps(doc))
        return 0
    _emit(out, f"V_P for main register of {q} qubits (n = {1 << q})")
    _emit(out, f"total qubits: {total.num_qubits}")
    _emit(out, f"central controlled-phase: {sections['central_band'].controlled_phase}")
    rows = [["section", "hadamard", "phase", "controlled_phase", "swap", "total"]]
    rows += [_counts_row(k, v) for k, v in sections.items()]
    rows.append(_counts_row("total", total))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        _emit(out, "  ".join(cell.ljust(w) if i == 0 else cell.rjust(w) for i, (cell, w) in enumerate(zip(r, widths))).rstrip())
    return 0


def cmd_simulate_vp(args, out) -> int:
    q = args.qubits
    if not 1 <= q <= 5:
        raise UsageError("--qubits must be between 1 and 5 (dense oracle caps n at 32)")
    n = 1 << q
    rng = np.random.default_rng(args.seed)
    main = StateVector.from_amplitudes(random_complex(rng, n))
    start = StateVector.from_amplitudes(np.ones(n)).tensor(main)
    got = run_circuit(start, v_p_circuit(q))
    want = v_p_dense(n) @ start.amps
    err = float(np.max(np.abs(got.amps - want)))
    ok = err <= 1e-10
    if args.json:
        _emit(out, dumps({"qubits": q, "seed": args.seed, "max_abs_error": err, "passed": ok, "state": got.to_dict()}))
    else:
        _emit(out, f"V_P simulation q={q} seed={args.seed}: max |circuit - dense| = {fmt(err)} {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_verify(args, out) -> int:
    results = run_verification(args.n, args.seed)
    for r in results:
        _emit(out, r.line())
    passed = all(r.passed for r in results)
    _emit(out, f"{'OK' if passed else 'FAILED'} {sum(r.passed for r in results)}/{len(results)} checks (n={args.n}, seed={args.seed})")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcirculant",
        description="Circulant-matrix quantum circuits and rotation-based string structures.",
    )
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("bwt", help="classical Burrows-Wheeler transform")
    p.add_argument("text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bwt)

    p = sub.add_parser("suffix-array", help="brute-force suffix array")
    p.add_argument("text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_suffix_array)

    p = sub.add_parser("rotations", help="build the rotation-superposition state and decode it")
    p.add_argument("text")
    p.add_argument("--boost", type=float, default=1.0)
    p.add_argument("--method", choices=("circuit", "dense"), default="circuit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rotations)

    p = sub.add_parser("sample", help="seeded measurement sampling and sentinel recovery")
    p.add_argument("text")
    p.add_argument("--shots", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--boost", type=float, default=1.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("sort-rotations", help="odd-even transposition rounds over the rotations")
    p.add_argument("text")
    p.add_argument("--rounds", type=int, default=None)
    p.set_defaults(func=cmd_sort_rotations)

    p = sub.add_parser("gates", help="gate and qubit budget of V_P")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--circuit", action="store_true", help="with --json, include the full gate list")
    p.set_defaults(func=cmd_gates)

    p = sub.add_parser("simulate-vp", help="simulate V_P on a seeded random input and compare with the dense oracle")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate_vp)

    p = sub.add_parser("verify", help="run the oracle-equivalence suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except DecodingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, SentinelError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
