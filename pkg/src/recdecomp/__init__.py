"""Recursive decomposition of n-qubit unitaries into controlled single-qubit gates."""

from .counting import (
    b1_closed_form,
    compare_series,
    count_breakdown,
    count_gray,
    count_scheme,
    count_scheme_from_schedule,
    total_controls,
    weighted_total,
)
from .decompose import Decomposition, ResidualError, decompose, reconstruct, verify
from .gates import ControlledGate, GatePattern, apply_gate_left, expand_gate, matched_row_pairs, parse_pattern
from .linalg import UnitarityError, check_unitary, givens_for_pair, haar_random_unitary
from .scheme import (
    Schedule,
    ScheduleEntry,
    adapt_gate,
    column1_lower_order,
    final_gate,
    generate_schedule,
    lift_gate,
    xor_index,
)

__version__ = "0.1.0"
