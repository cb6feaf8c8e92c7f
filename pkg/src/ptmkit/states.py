"""Logical states supported on the two PTM index classes, for qubits and qudits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .capacity import MAX_STATE_QUBITS, check
from .hilbert import StateVector
from .sequence import ptm_block

INV_SQRT2 = float(np.sqrt(0.5))

# Amplitude (1/sqrt(2))^(N-1) built by cumulative multiplication so that the
# one-more-qubit composition reproduces the direct construction bit for bit.
_AMPS = [1.0]


def _amplitude(order: int) -> float:
    while len(_AMPS) < order:
        _AMPS.append(_AMPS[-1] * INV_SQRT2)
    return _AMPS[order - 1]


@dataclass(frozen=True)
class PtmLogical:
    """A logical-0 or logical-1 state: uniform superposition over one index class."""

    order: int
    which: int  # 0 or 1
    state: StateVector
    qudit: bool = False

    @property
    def dimension(self) -> int:
        return self.state.dim


def ptm_state(num_qubits: int, which: int) -> PtmLogical:
    """Equal-amplitude superposition over E(N) (which=0) or O(N) (which=1)."""
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    if which not in (0, 1):
        raise ValueError("logical label must be 0 or 1")
    check(num_qubits, MAX_STATE_QUBITS, "ptm_state")
    bits = ptm_block(num_qubits).bits
    amps = np.zeros(2**num_qubits, dtype=complex)
    amps[bits == which] = _amplitude(num_qubits)
    return PtmLogical(num_qubits, which, StateVector(amps))


def ptm_compose(prev0: PtmLogical, prev1: PtmLogical) -> tuple[PtmLogical, PtmLogical]:
    """One-more-qubit recursion on an order-N logical pair.

    next0 = (|0> prev0 + |1> prev1)/sqrt(2), next1 with the roles swapped.
    Output amplitudes equal ptm_state(N+1, .) exactly (same float sequence).
    """
    if prev0.order != prev1.order:
        raise ValueError("logical pair must share the same order")
    if prev0.which != 0 or prev1.which != 1:
        raise ValueError("arguments must be the (logical-0, logical-1) pair")
    check(prev0.order + 1, MAX_STATE_QUBITS, "ptm_compose")
    a0, a1 = prev0.state.amps, prev1.state.amps
    next0 = np.concatenate([a0, a1]) * INV_SQRT2
    next1 = np.concatenate([a1, a0]) * INV_SQRT2
    order = prev0.order + 1
    return (
        PtmLogical(order, 0, StateVector(next0)),
        PtmLogical(order, 1, StateVector(next1)),
    )


def ptm_qudit_state(dimension: int, which: int) -> PtmLogical:
    """Qudit variant: amplitude sqrt(2/d) on one index class of {0, ..., d-1}.

    Only powers of two are accepted: the sqrt(2/d) prefactor normalizes the
    state only when the sequence prefix of length d is exactly balanced,
    which holds at d = 2^N.
    """
    if dimension < 2 or dimension & (dimension - 1):
        raise ValueError("qudit dimension must be a power of two >= 2")
    order = dimension.bit_length() - 1
    state = ptm_state(order, which)
    return PtmLogical(order, which, state.state, qudit=True)


def encode_logical(alpha: complex, beta: complex, num_qubits: int) -> StateVector:
    """alpha |0_logical> + beta |1_logical> over N qubits."""
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-12:
        raise ValueError("logical coefficients must satisfy |a|^2 + |b|^2 = 1")
    s0 = ptm_state(num_qubits, 0).state.amps
    s1 = ptm_state(num_qubits, 1).state.amps
    return StateVector(alpha * s0 + beta * s1)
