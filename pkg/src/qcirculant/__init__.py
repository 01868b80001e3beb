"""Quantum circuits for circulant matrices, simulated on a state vector, and the
rotation-superposition route to Burrows-Wheeler and suffix structures."""

from .circulant import (
    CirculantSpec,
    apply_circulant,
    dense_circulant,
    dense_shift,
    eigenvalues,
    eigenvector,
    poly_reconstruct,
)
from .qsim import (
    Circuit,
    Gate,
    GateCounts,
    StateVector,
    apply_gate,
    circuit_unitary,
    gate_counts,
    inverse_qft_circuit,
    qft_circuit,
    run_circuit,
)
from .shift_circuits import (
    PHASE_SIGN,
    ShiftCircuitPlan,
    lambda_p_circuit,
    u_p_gates,
    v_p_circuit,
    v_p_dense,
    v_p_gate_budget,
)
from .sort_sim import SortableBlock, bucket_hash, compare_exchange_round, odd_even_sort
from .strings import (
    EncodedString,
    RotationDecoding,
    SampleHistogram,
    bwt,
    bwt_from_rotations,
    decode_blocks,
    encode,
    reconstruct_sentinels,
    rotation_state,
    sample,
    suffix_array,
)

__version__ = "0.1.0"
