"""Local Hamiltonians and the two unitary evolution backends.

A local Hamiltonian h_i*I + v.sigma acts on one qubit only.  The full
backend applies the 4x4 product unitary to the state vector and serves as
ground truth.  The separable backend never touches the 4-dim space: it
rotates each spinor of the phase-fixed Schmidt decomposition with the
traceless part of its own Hamiltonian, keeps chi fixed (no local unitary
can change the concurrence), and books the scalar parts as accumulated
phases beta1, beta2 in a ledger.  The exact full state, global phase
included, is e^(-i(beta1+beta2)) * reconstruct(decomposition) at all
times.  Natural units, hbar = 1; time dependence is piecewise constant.
"""

from __future__ import annotations

import dataclasses
import itertools

import numpy as np

from .states import (
    EPS_DEGEN,
    HALF_PI,
    AngleSet,
    MaximalEntanglement,
    SeparableGamma,
    SpinorDecomposition,
    _schmidt_chi,
    angles_from_state,
    as_state,
    decompose,
    reconstruct,
    spherical_angles,
    spinor_from_angles,
    state_bloch_vector,
    wrap_angle,
)

ID2 = np.eye(2, dtype=complex)


class NonUnitDirection(ValueError):
    """An axis argument was not a unit 3-vector."""


class DegenerateState(ValueError):
    """A recurrence-drift check needs a partially entangled state."""


@dataclasses.dataclass(frozen=True)
class LocalHamiltonian:
    """One qubit's Hamiltonian h_i*I + v.sigma; v may be the zero vector."""

    h_i: float
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "h_i", float(self.h_i))
        object.__setattr__(self, "v", np.asarray(self.v, dtype=float).reshape(3))

    def matrix(self) -> np.ndarray:
        vx, vy, vz = self.v
        return np.array([[self.h_i + vz, vx - 1j * vy],
                         [vx + 1j * vy, self.h_i - vz]])


ZERO_HAMILTONIAN = LocalHamiltonian(0.0, np.zeros(3))


@dataclasses.dataclass(frozen=True)
class PhaseLedger:
    """Accumulated spin-independent phases, one per qubit.

    Evolving qubit i under h_i for time t adds h_i*t to beta_i; the factor
    restoring the full global phase is ``phase``.
    """

    beta1: float = 0.0
    beta2: float = 0.0

    def advanced(self, qubit: int, delta: float) -> "PhaseLedger":
        if qubit == 1:
            return PhaseLedger(self.beta1 + delta, self.beta2)
        if qubit == 2:
            return PhaseLedger(self.beta1, self.beta2 + delta)
        raise ValueError(f"qubit must be 1 or 2, got {qubit!r}")

    @property
    def phase(self) -> complex:
        """e^(-i(beta1+beta2))."""
        return complex(np.exp(-1j * (self.beta1 + self.beta2)))


@dataclasses.dataclass
class EvolutionReport:
    """Side-by-side result of both backends for one schedule pair.

    max_component_deviation is the plain infinity norm of the amplitude
    difference; no phase alignment is applied, since the ledger already
    restores the exact global phase.
    """

    final_state_full: np.ndarray
    final_state_separable: np.ndarray
    max_component_deviation: float
    angle_traces: list[AngleSet | None] | None = None


def su2_operator(h: LocalHamiltonian, t: float) -> np.ndarray:
    """exp(-i (v.sigma) t) in closed form; the scalar part h_i is excluded.

    cos(|v|t) I - i sin(|v|t) (v_hat . sigma), the identity for v = 0.
    """
    speed = float(np.linalg.norm(h.v))
    if speed == 0.0:
        return ID2.copy()
    x, y, z = h.v / speed
    angle = speed * t
    axis = np.array([[z, x - 1j * y], [x + 1j * y, -z]])
    return np.cos(angle) * ID2 - 1j * np.sin(angle) * axis


def local_unitary(h: LocalHamiltonian, t: float) -> np.ndarray:
    """The complete one-qubit evolution operator, scalar phase included."""
    return np.exp(-1j * h.h_i * t) * su2_operator(h, t)


def evolve_spinor(spinor, h: LocalHamiltonian, t: float, ledger: PhaseLedger,
                  qubit: int) -> tuple[np.ndarray, PhaseLedger]:
    """Rotate one local spinor and book its scalar energy into the ledger."""
    s = su2_operator(h, t) @ np.asarray(spinor, dtype=complex).reshape(2)
    return s, ledger.advanced(qubit, h.h_i * t)


def evolve_full(psi, h1: LocalHamiltonian, h2: LocalHamiltonian, t: float) -> np.ndarray:
    """Evolve the full 4-vector under h1 x I + I x h2 for time t.

    Scalar parts included, so this is the ground-truth backend.
    """
    psi = np.asarray(psi, dtype=complex).reshape(4)
    return np.kron(local_unitary(h1, t), local_unitary(h2, t)) @ psi


def evolve_separable(d: SpinorDecomposition, ledger: PhaseLedger,
                     h1: LocalHamiltonian, h2: LocalHamiltonian,
                     t: float) -> tuple[SpinorDecomposition, PhaseLedger]:
    """Evolve both spinors locally for time t; chi never changes."""
    s1, ledger = evolve_spinor(d.spinor1, h1, t, ledger, 1)
    s2, ledger = evolve_spinor(d.spinor2, h2, t, ledger, 2)
    return SpinorDecomposition(d.chi, s1, s2), ledger


def evolve_full_schedule(psi, schedule1, schedule2) -> np.ndarray:
    """Run two per-qubit piecewise-constant schedules on the full state.

    Schedules are sequences of (LocalHamiltonian, duration).  The two
    qubits' unitaries commute, so each schedule may be applied in sequence
    regardless of the other's timing.
    """
    psi = np.asarray(psi, dtype=complex).reshape(4)
    for h, dt in schedule1:
        psi = np.kron(local_unitary(h, dt), ID2) @ psi
    for h, dt in schedule2:
        psi = np.kron(ID2, local_unitary(h, dt)) @ psi
    return psi


def evolve_separable_schedule(d: SpinorDecomposition, ledger: PhaseLedger,
                              schedule1, schedule2) -> tuple[SpinorDecomposition, PhaseLedger]:
    """Run the same schedules entirely on the two 2-dim spinors."""
    s1, s2 = d.spinor1, d.spinor2
    for h, dt in schedule1:
        s1 = su2_operator(h, dt) @ s1
        ledger = ledger.advanced(1, h.h_i * dt)
    for h, dt in schedule2:
        s2 = su2_operator(h, dt) @ s2
        ledger = ledger.advanced(2, h.h_i * dt)
    return SpinorDecomposition(d.chi, s1, s2), ledger


def _trace_angles(psi) -> AngleSet | None:
    try:
        return angles_from_state(psi)
    except SeparableGamma as exc:
        return exc.angles
    except MaximalEntanglement:
        return None


def compare_backends(psi, schedule1, schedule2, trace: bool = False) -> EvolutionReport:
    """Evolve on both backends step by step and report the raw deviation.

    Steps of the two schedules are paired up (shorter one padded with
    do-nothing steps); with trace=True the six angles of the full state are
    recorded after every step, entries None where undefined.
    """
    psi = as_state(psi)
    d = decompose(psi)
    ledger = PhaseLedger()
    full = psi
    traces: list[AngleSet | None] | None = [] if trace else None
    pad = (ZERO_HAMILTONIAN, 0.0)
    for (h1, t1), (h2, t2) in itertools.zip_longest(schedule1, schedule2, fillvalue=pad):
        full = np.kron(local_unitary(h1, t1), local_unitary(h2, t2)) @ full
        s1, ledger = evolve_spinor(d.spinor1, h1, t1, ledger, 1)
        s2, ledger = evolve_spinor(d.spinor2, h2, t2, ledger, 2)
        d = SpinorDecomposition(d.chi, s1, s2)
        if traces is not None:
            traces.append(_trace_angles(full))
    separable = ledger.phase * reconstruct(d)
    deviation = float(np.max(np.abs(full - separable)))
    return EvolutionReport(full, separable, deviation, traces)


def aligned_eigenvectors(direction) -> tuple[np.ndarray, np.ndarray]:
    """Half-angle eigenspinors (psi_plus, psi_minus) of v.sigma along a unit axis."""
    theta, phi = spherical_angles(np.asarray(direction, dtype=float))
    plus = spinor_from_angles(theta, phi)
    minus = np.array([np.sin(theta / 2) * np.exp(-0.5j * phi),
                      -np.cos(theta / 2) * np.exp(+0.5j * phi)])
    return plus, minus


def aligned_hamiltonian(direction, energy: float) -> LocalHamiltonian:
    """Traceless Hamiltonian of strength ``energy`` along a unit Bloch axis.

    When the axis matches a qubit's own partial-trace direction this is the
    generator of pure recurrence rotation: it leaves both Bloch vectors and
    chi untouched and drifts gamma linearly.
    """
    direction = np.asarray(direction, dtype=float).reshape(3)
    if abs(np.linalg.norm(direction) - 1.0) > 1e-9:
        raise NonUnitDirection(f"|direction| = {np.linalg.norm(direction)!r}")
    if not energy > 0.0:
        raise ValueError("energy must be positive")
    h = LocalHamiltonian(0.0, energy * direction)
    plus, minus = aligned_eigenvectors(direction)
    m = h.matrix()
    assert np.linalg.norm(m @ plus - energy * plus) < 1e-10
    assert np.linalg.norm(m @ minus + energy * minus) < 1e-10
    return h


def aligned_mode_coefficients(psi, qubit: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Expand a state over the degenerate eigenpairs of its aligned Hamiltonian.

    Returns (coefficients, basis) where the basis stacks psi_plus x e0,
    psi_plus x e1, psi_minus x e0, psi_minus x e1 built on the chosen
    qubit's partial-trace axis (tensor order swapped for qubit 2).  The
    first two modes share eigenvalue +E, the last two -E, so an aligned
    evolution only counter-rotates the two halves.  Completeness of the
    four coefficients is asserted to 1e-12.
    """
    psi = as_state(psi)
    n = state_bloch_vector(psi, qubit)
    r = float(np.linalg.norm(n))
    if r <= EPS_DEGEN:
        raise DegenerateState("the chosen qubit's Bloch vector vanishes")
    plus, minus = aligned_eigenvectors(n / r)
    e0, e1 = ID2
    if qubit == 1:
        basis = [np.kron(plus, e0), np.kron(plus, e1), np.kron(minus, e0), np.kron(minus, e1)]
    else:
        basis = [np.kron(e0, plus), np.kron(e1, plus), np.kron(e0, minus), np.kron(e1, minus)]
    coeffs = np.array([np.vdot(b, psi) for b in basis])
    rebuilt = sum(c * b for c, b in zip(coeffs, basis))
    assert np.linalg.norm(rebuilt - psi) < 1e-12
    return coeffs, np.array(basis)


def _unwrap_nearest(gammas: np.ndarray) -> np.ndarray:
    out = np.array(gammas, dtype=float)
    for k in range(1, len(out)):
        out[k] += 2.0 * np.pi * round((out[k - 1] - out[k]) / (2.0 * np.pi))
    return out


def _circular_spread(values) -> float:
    ref = values[0]
    return max(abs(wrap_angle(v - ref)) for v in values)


def recurrence_drift(psi, qubit: int, energy: float, t_grid) -> tuple[float, float]:
    """Rotate one qubit about its own Bloch axis and fit gamma(t) to a line.

    Evolves the full state across t_grid under the aligned Hamiltonian of
    strength ``energy`` on the chosen qubit, extracts gamma at each time
    (projection method, unwrapped by nearest-branch continuation), and
    returns (slope, residual): the fitted d(gamma)/dt and the largest
    absolute deviation from the fit.  The five other angles must stay
    constant to 1e-8 across the grid (asserted).  In these conventions the
    slope comes out at -2*energy.
    """
    psi = as_state(psi)
    chi = _schmidt_chi(psi)  # edge-stable, so exact singlets cannot slip the gate
    if not EPS_DEGEN < chi < HALF_PI - EPS_DEGEN:
        raise DegenerateState("recurrence drift needs a partially entangled state")
    n = state_bloch_vector(psi, qubit)
    h = aligned_hamiltonian(n / np.linalg.norm(n), energy)
    h1, h2 = (h, ZERO_HAMILTONIAN) if qubit == 1 else (ZERO_HAMILTONIAN, h)
    t_grid = np.asarray(t_grid, dtype=float)
    records = [angles_from_state(evolve_full(psi, h1, h2, t)) for t in t_grid]
    gammas = _unwrap_nearest(np.array([r.gamma for r in records]))
    slope, intercept = np.polyfit(t_grid, gammas, 1)
    residual = float(np.max(np.abs(gammas - (slope * t_grid + intercept))))
    assert max(r.chi for r in records) - min(r.chi for r in records) < 1e-8
    assert max(r.theta1 for r in records) - min(r.theta1 for r in records) < 1e-8
    assert max(r.theta2 for r in records) - min(r.theta2 for r in records) < 1e-8
    assert _circular_spread([r.phi1 for r in records]) < 1e-8
    assert _circular_spread([r.phi2 for r in records]) < 1e-8
    return float(slope), residual


def compound_rotation_check(psi, energy1: float, energy2: float, t: float,
                            same_handed: bool) -> float:
    """Rotate both qubits about their own axes; return gamma(t) - gamma(0).

    Same-handed rotations compound the drift (|delta| grows as
    2(E1+E2)t); opposite-handed rotations with equal energies cancel it
    exactly.  The difference is returned wrapped to (-pi, pi].
    """
    psi = as_state(psi)
    chi = _schmidt_chi(psi)
    if not EPS_DEGEN < chi < HALF_PI - EPS_DEGEN:
        raise DegenerateState("the compound-rotation check needs a partially entangled state")
    n1 = state_bloch_vector(psi, 1)
    n2 = state_bloch_vector(psi, 2)
    h1 = aligned_hamiltonian(n1 / np.linalg.norm(n1), energy1)
    axis2 = n2 / np.linalg.norm(n2)
    h2 = aligned_hamiltonian(axis2 if same_handed else -axis2, energy2)
    start = angles_from_state(psi).gamma
    end = angles_from_state(evolve_full(psi, h1, h2, t)).gamma
    return wrap_angle(end - start)
