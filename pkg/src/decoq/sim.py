"""Dense density-matrix simulation of small noisy circuits (up to 11 wires).

States are 2^m x 2^m density matrices with tensor-factor order equal to wire
order (wire 0 is the most significant bit of the basis index).  Gates act on
one, two, three, or a block of wires and are applied by tensor contraction on
a (2,)*2m view of the state — the full 2^m x 2^m gate matrix is never built.

The main entry point is simulate_choi: prepare a maximally entangled pair
between a reference wire and the code's data wire, run the encoder, apply a
single-qubit channel independently to every code wire, run the decoder and
recovery, and trace out everything but (data, reference).  The result is the
Choi state of the error-corrected logical channel, with the noisy (data)
factor first.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel, maximally_entangled

MAX_WIRES = 11
UNITARY_ATOL = 1e-12

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)
_PAULIS_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class Gate:
    """A unitary acting on an ordered tuple of wires."""
    name: str
    wires: tuple
    matrix: np.ndarray

    def __post_init__(self):
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)
        if len(set(wires)) != len(wires):
            raise ValueError(f"gate {self.name}: repeated wire in {wires}")
        mat = np.array(self.matrix, dtype=complex)
        dim = 2 ** len(wires)
        if mat.shape != (dim, dim):
            raise ValueError(f"gate {self.name}: matrix shape {mat.shape} "
                             f"does not match {len(wires)} wires")
        if np.abs(mat.conj().T @ mat - np.eye(dim)).max() > UNITARY_ATOL:
            raise ValueError(f"gate {self.name}: matrix is not unitary")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


def hadamard(wire: int) -> Gate:
    return Gate("H", (wire,), _H)


def pauli_gate(label: str, wire: int) -> Gate:
    return Gate(label, (wire,), _PAULIS_1Q[label])


def controlled_pauli(label: str, controls, target: int) -> Gate:
    """Pauli on ``target`` conditioned on all ``controls`` being |1>."""
    controls = tuple(controls)
    k = len(controls) + 1
    mat = np.eye(2 ** k, dtype=complex)
    block = _PAULIS_1Q[label]
    mat[-2:, -2:] = block            # all-controls-on subspace, target last
    name = "C" * len(controls) + label
    return Gate(name, controls + (target,), mat)


def cnot(control: int, target: int) -> Gate:
    return controlled_pauli("X", (control,), target)


def cz(control: int, target: int) -> Gate:
    return controlled_pauli("Z", (control,), target)


def toffoli(control_a: int, control_b: int, target: int) -> Gate:
    return controlled_pauli("X", (control_a, control_b), target)


def block_unitary(name: str, wires, matrix: np.ndarray) -> Gate:
    """A dense unitary block over several wires (used for synthesized recovery)."""
    return Gate(name, tuple(wires), matrix)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list on ``wire_count`` wires.

    ``noise_slots`` marks where an externally supplied per-qubit channel is
    applied: each entry is (position, wires) meaning "after ``position`` gates
    have run, apply the channel to each listed wire".
    """
    wire_count: int
    gates: tuple = ()
    noise_slots: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "noise_slots",
                           tuple((int(pos), tuple(ws)) for pos, ws in self.noise_slots))
        for g in self.gates:
            _check_wires(g.wires, self.wire_count)
        for pos, ws in self.noise_slots:
            if not 0 <= pos <= len(self.gates):
                raise ValueError("noise slot position out of range")
            _check_wires(ws, self.wire_count)


def _check_wires(wires, wire_count: int):
    for w in wires:
        if not 0 <= w < wire_count:
            raise ValueError(f"wire {w} out of range for {wire_count} wires")


def _wire_count_of(rho: np.ndarray) -> int:
    m = int(rho.shape[0]).bit_length() - 1
    if rho.shape != (2 ** m, 2 ** m):
        raise ValueError("state dimension is not a power of two")
    return m


def _contract(tens: np.ndarray, op: np.ndarray, axes) -> np.ndarray:
    """Apply ``op`` to the given tensor axes of a (2,)*2m state tensor."""
    k = len(axes)
    u = op.reshape((2,) * (2 * k))
    tens = np.tensordot(u, tens, axes=(tuple(range(k, 2 * k)), tuple(axes)))
    return np.moveaxis(tens, range(k), axes)


def apply_gate(rho: np.ndarray, gate: Gate) -> np.ndarray:
    """Conjugate the state by the gate: rho -> U rho U^dag."""
    m = _wire_count_of(rho)
    _check_wires(gate.wires, m)
    tens = rho.reshape((2,) * (2 * m))
    tens = _contract(tens, gate.matrix, gate.wires)
    tens = _contract(tens, gate.matrix.conj(), tuple(m + w for w in gate.wires))
    return tens.reshape(rho.shape)


def apply_gate_state(psi: np.ndarray, gate: Gate, wire_count: int) -> np.ndarray:
    """Apply the gate to a state vector over ``wire_count`` wires."""
    _check_wires(gate.wires, wire_count)
    tens = psi.reshape((2,) * wire_count)
    tens = _contract(tens, gate.matrix, gate.wires)
    return tens.reshape(-1)


def apply_channel_wire(rho: np.ndarray, channel: KrausChannel, wire: int) -> np.ndarray:
    """Apply a single-qubit Kraus channel to one wire of the register."""
    if channel.dim != 2:
        raise ValueError("per-wire noise must be a single-qubit channel")
    m = _wire_count_of(rho)
    _check_wires((wire,), m)
    tens = rho.reshape((2,) * (2 * m))
    out = np.zeros_like(tens)
    for op in channel.operators:
        term = _contract(tens, op, (wire,))
        out += _contract(term, op.conj(), (m + wire,))
    return out.reshape(rho.shape)


def apply_noise_all(rho: np.ndarray, channel: KrausChannel, wires) -> np.ndarray:
    """Apply the same single-qubit channel independently to each listed wire."""
    for w in wires:
        rho = apply_channel_wire(rho, channel, w)
    return rho


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Trace out all wires not in ``keep``; output factors follow keep order."""
    keep = tuple(keep)
    if not keep:
        raise ValueError("keep at least one wire")
    m = _wire_count_of(rho)
    _check_wires(keep, m)
    if len(set(keep)) != len(keep):
        raise ValueError("repeated wire in keep list")
    traced = tuple(w for w in range(m) if w not in keep)
    tens = rho.reshape((2,) * (2 * m))
    order = (keep + traced + tuple(m + w for w in keep)
             + tuple(m + w for w in traced))
    tens = tens.transpose(order)
    nk, nt = 2 ** len(keep), 2 ** len(traced)
    tens = tens.reshape(nk, nt, nk, nt)
    return np.einsum("atbt->ab", tens)


def run_circuit(rho: np.ndarray, circuit: Circuit,
                noise: KrausChannel | None = None) -> np.ndarray:
    """Run all gates in order, applying ``noise`` at each declared slot."""
    if _wire_count_of(rho) != circuit.wire_count:
        raise ValueError("state size does not match circuit wire count")
    slots = {}
    for pos, ws in circuit.noise_slots:
        slots.setdefault(pos, []).extend(ws)
    for i, gate in enumerate(circuit.gates):
        for w in slots.get(i, ()):
            if noise is not None:
                rho = apply_channel_wire(rho, noise, w)
        rho = apply_gate(rho, gate)
    for w in slots.get(len(circuit.gates), ()):
        if noise is not None:
            rho = apply_channel_wire(rho, noise, w)
    return rho


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """The full 2^m x 2^m unitary of a (noise-free) circuit."""
    dim = 2 ** circuit.wire_count
    cols = np.eye(dim, dtype=complex)
    for j in range(dim):
        psi = cols[:, j].copy()
        for gate in circuit.gates:
            psi = apply_gate_state(psi, gate, circuit.wire_count)
        cols[:, j] = psi
    return cols


def shift_gates(gates, offset: int):
    """The same gates with every wire index moved up by ``offset``."""
    return tuple(Gate(g.name, tuple(w + offset for w in g.wires), g.matrix)
                 for g in gates)


def simulate_choi(code, noise) -> np.ndarray:
    """Choi state of the error-corrected channel built from ``code`` + noise.

    ``noise`` is either one single-qubit KrausChannel (applied independently
    to every code wire) or a sequence of per-code-wire channels (entries may
    be None for no noise on that wire).  Wire 0 of the register is the
    untouched reference, wire 1 the data qubit, wires 2..n the ancillas.
    Returns the 4x4 state on (data, reference), data factor first.
    """
    n = code.n
    m = n + 1
    if m > MAX_WIRES:
        raise ValueError(f"register of {m} wires exceeds the {MAX_WIRES}-wire limit")
    if isinstance(noise, KrausChannel):
        per_wire = (noise,) * n
    else:
        per_wire = tuple(noise)
        if len(per_wire) != n:
            raise ValueError(f"need one channel per code wire ({n}), "
                             f"got {len(per_wire)}")

    # |Omega> on (reference=0, data=1), ancillas |0>
    psi = np.zeros(2 ** m, dtype=complex)
    psi[0] = 1.0 / np.sqrt(2.0)
    psi[(1 << (m - 1)) + (1 << (m - 2))] = 1.0 / np.sqrt(2.0)
    rho = np.outer(psi, psi.conj())

    for gate in shift_gates(code.encoder.gates, 1):
        rho = apply_gate(rho, gate)
    for w, ch in enumerate(per_wire):
        if ch is not None:
            rho = apply_channel_wire(rho, ch, 1 + w)
    for gate in shift_gates(code.decoder.gates, 1):
        rho = apply_gate(rho, gate)
    for gate in shift_gates(code.recovery, 1):
        rho = apply_gate(rho, gate)

    tau = partial_trace(rho, keep=(1, 0))
    return tau


def bell_choi_reference() -> np.ndarray:
    """The ideal output |Omega><Omega| a perfect correction run returns."""
    psi = maximally_entangled(2)
    return np.outer(psi, psi.conj())
