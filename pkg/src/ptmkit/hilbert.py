"""Dense complex linear algebra substrate: states, density matrices, operators.

Conventions: qubit 1 is the leftmost tensor factor, i.e. the most significant
bit of the basis index, so |(k)_2> for an N-qubit register is the basis vector
at index k. All dense objects are numpy complex128.
"""

from __future__ import annotations

import numpy as np

from .capacity import MAX_DENSITY_QUBITS, MAX_OPERATOR_QUBITS, MAX_STATE_QUBITS, check

NORM_ATOL = 1e-12
HERM_ATOL = 1e-12
PSD_ATOL = 1e-10

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
HADAMARD_1Q = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)
IDENTITY_1Q = np.eye(2, dtype=complex)


class StateVector:
    """Normalized amplitude vector over a dim-dimensional Hilbert space."""

    __slots__ = ("amps",)

    def __init__(self, amps, normalize: bool = False, validate: bool = True):
        amps = np.asarray(amps, dtype=complex).reshape(-1)
        if normalize:
            nrm = np.linalg.norm(amps)
            if nrm == 0.0:
                raise ValueError("cannot normalize the zero vector")
            amps = amps / nrm
        if validate and abs(np.vdot(amps, amps).real - 1.0) > NORM_ATOL:
            raise ValueError("state vector is not normalized")
        self.amps = amps

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def num_qubits(self) -> int:
        n = self.dim.bit_length() - 1
        if 2**n != self.dim:
            raise ValueError("dimension is not a power of two")
        return n

    def __repr__(self):
        return f"StateVector(dim={self.dim})"


def basis_state(dim: int, index: int) -> StateVector:
    """Computational basis vector |index> in a dim-dimensional space."""
    if not 0 <= index < dim:
        raise ValueError("basis index out of range")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return StateVector(amps)


class DensityMatrix:
    """Hermitian, unit-trace, positive semi-definite matrix.

    Validation is an explicit flag: integrators produce matrices with drift
    of order 1e-9, which the strict construction tolerances would reject;
    their contracts check drift separately.
    """

    __slots__ = ("mat",)

    def __init__(self, mat, validate: bool = True):
        mat = np.asarray(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        if validate:
            if np.max(np.abs(mat - mat.conj().T)) > HERM_ATOL:
                raise ValueError("density matrix is not Hermitian")
            if abs(np.trace(mat).real - 1.0) > NORM_ATOL:
                raise ValueError("density matrix trace is not 1")
            if np.linalg.eigvalsh(mat).min() < -PSD_ATOL:
                raise ValueError("density matrix is not positive semi-definite")
        self.mat = mat

    @classmethod
    def from_pure(cls, psi: StateVector) -> "DensityMatrix":
        return cls(np.outer(psi.amps, psi.amps.conj()), validate=False)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


class OperatorSpec:
    """Operator held densely or as a product of single-site Pauli factors.

    Pauli-string form: factors is a sequence of (site, axis) pairs with sites
    1-based over num_qubits register slots; the product is taken left to
    right. Either form materializes to the same dense matrix.
    """

    __slots__ = ("dim", "_dense", "factors", "num_qubits")

    def __init__(self, dim, dense=None, factors=None, num_qubits=None):
        if (dense is None) == (factors is None):
            raise ValueError("exactly one of dense/factors must be given")
        self.dim = int(dim)
        self._dense = None if dense is None else np.asarray(dense, dtype=complex)
        self.factors = None if factors is None else tuple(factors)
        self.num_qubits = num_qubits
        if self._dense is not None and self._dense.shape != (self.dim, self.dim):
            raise ValueError("dense matrix shape does not match dim")
        if self.factors is not None:
            if num_qubits is None or 2**num_qubits != self.dim:
                raise ValueError("pauli-string form needs num_qubits with dim = 2^n")
            for site, axis in self.factors:
                if not 1 <= site <= num_qubits:
                    raise ValueError(f"pauli site {site} outside register 1..{num_qubits}")
                if axis not in PAULI:
                    raise ValueError(f"unknown pauli axis {axis!r}")

    @classmethod
    def from_dense(cls, mat) -> "OperatorSpec":
        mat = np.asarray(mat, dtype=complex)
        return cls(mat.shape[0], dense=mat)

    @classmethod
    def from_pauli_string(cls, factors, num_qubits: int) -> "OperatorSpec":
        return cls(2**num_qubits, factors=factors, num_qubits=num_qubits)

    @property
    def is_pauli_string(self) -> bool:
        return self.factors is not None

    def materialize(self) -> np.ndarray:
        """Dense matrix form (capacity-checked for pauli strings)."""
        if self._dense is not None:
            return self._dense
        check(self.num_qubits, MAX_OPERATOR_QUBITS, "OperatorSpec.materialize")
        # collapse repeated factors on the same site into one 2x2 product
        site_mats = {}
        for site, axis in self.factors:
            site_mats[site] = site_mats.get(site, IDENTITY_1Q) @ PAULI[axis]
        out = np.ones((1, 1), dtype=complex)
        for site in range(1, self.num_qubits + 1):
            out = np.kron(out, site_mats.get(site, IDENTITY_1Q))
        return out

    def __repr__(self):
        kind = "pauli" if self.is_pauli_string else "dense"
        return f"OperatorSpec(dim={self.dim}, {kind})"


def apply_one_site(amps: np.ndarray, mat: np.ndarray, site: int, n: int) -> np.ndarray:
    """Apply a 2x2 matrix at tensor slot `site` (1-based, leftmost = slot 1)."""
    t = amps.reshape([2] * n)
    t = np.moveaxis(t, site - 1, 0)
    t = np.tensordot(mat, t, axes=([1], [0]))
    return np.moveaxis(t, 0, site - 1).reshape(-1)


def apply_operator(op: OperatorSpec, amps: np.ndarray) -> np.ndarray:
    """op @ amps without materializing pauli strings."""
    if op.dim != amps.shape[0]:
        raise ValueError("operator/state dimension mismatch")
    if not op.is_pauli_string:
        return op._dense @ amps
    out = amps
    # right-to-left so the string acts as written (leftmost factor last)
    for site, axis in reversed(op.factors):
        out = apply_one_site(out, PAULI[axis], site, op.num_qubits)
    return out


def kron(a, b):
    """Tensor product of two StateVectors or two OperatorSpecs."""
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        check((a.dim * b.dim).bit_length() - 1, MAX_STATE_QUBITS, "kron")
        return StateVector(np.kron(a.amps, b.amps), validate=False)
    if isinstance(a, OperatorSpec) and isinstance(b, OperatorSpec):
        if a.is_pauli_string and b.is_pauli_string:
            shifted = [(site + a.num_qubits, axis) for site, axis in b.factors]
            return OperatorSpec.from_pauli_string(
                list(a.factors) + shifted, a.num_qubits + b.num_qubits
            )
        return OperatorSpec.from_dense(np.kron(a.materialize(), b.materialize()))
    raise TypeError("kron operands must be two StateVectors or two OperatorSpecs")


def expectation(op: OperatorSpec, psi: StateVector) -> complex:
    """<psi| op |psi>."""
    if op.dim != psi.dim:
        raise ValueError("operator/state dimension mismatch")
    return complex(np.vdot(psi.amps, apply_operator(op, psi.amps)))


def matrix_element(bra: StateVector, op: OperatorSpec, ket: StateVector) -> complex:
    """<bra| op |ket>."""
    if op.dim != ket.dim or bra.dim != ket.dim:
        raise ValueError("operator/state dimension mismatch")
    return complex(np.vdot(bra.amps, apply_operator(op, ket.amps)))


def fidelity_up_to_phase(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2; invariant under global phases of either state."""
    if a.dim != b.dim:
        raise ValueError("state dimension mismatch")
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)


def validate_density_limits(num_qubits: int, what: str) -> None:
    check(num_qubits, MAX_DENSITY_QUBITS, what)
