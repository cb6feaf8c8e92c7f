"""Size guards for dense objects. PTM_MAX_QUBITS overrides every default."""

import os

MAX_BLOCK_ORDER = 30      # sequence blocks hold 2^order entries
MAX_STATE_QUBITS = 14     # dense state vectors
MAX_OPERATOR_QUBITS = 10  # dense operator matrices
MAX_DENSITY_QUBITS = 7    # dense density matrices (open-system evolution)
MAX_FFT_QUBITS = 22       # FFT-path spectra (vectors only, no matrices)


class CapacityError(ValueError):
    """Requested object exceeds the configured dense-size limit."""


def limit(default: int) -> int:
    env = os.environ.get("PTM_MAX_QUBITS")
    return int(env) if env else default


def check(order: int, default: int, what: str) -> None:
    cap = limit(default)
    if order > cap:
        raise CapacityError(
            f"{what}: order {order} exceeds limit {cap} "
            "(set PTM_MAX_QUBITS to override)"
        )
