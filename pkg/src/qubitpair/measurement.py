"""Born-rule probabilities, seeded state samplers, and brute-force oracles.

The two Born computations are deliberately redundant: born_full projects on
the 4-dim state vector, born_local uses only one qubit's (chi, spinor)
data, and the two must agree to machine precision.  The oracles at the
bottom (outer-product partial trace, eigendecomposition matrix
exponential) exist so every closed form elsewhere has an independent
check.

Randomness comes from numpy's default PCG64 bit generator, always through
an explicit seed, so every sample set reproduces bit for bit.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .dynamics import LocalHamiltonian
from .states import (
    HALF_PI,
    AngleSet,
    as_spinor,
    as_state,
    fix_global_phase,
    parity,
    state_from_angles,
    wrap_angle,
)


@dataclasses.dataclass(frozen=True)
class SampleSpec:
    """What to sample: how many states, from which seed, optionally pinned
    to a fixed concurrence angle."""

    count: int
    seed: int
    fixed_chi: float | None = None

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.fixed_chi is not None and not 0.0 <= self.fixed_chi <= HALF_PI:
            raise ValueError(f"fixed_chi out of [0, pi/2]: {self.fixed_chi!r}")


def born_full(psi, qubit: int, direction) -> float:
    """Probability of projecting the chosen qubit onto ``direction``.

    Computed on the full state: <psi| P x I |psi> (or I x P), with P the
    projector onto the direction spinor.
    """
    psi = as_state(psi)
    direction = as_spinor(direction)
    m = psi.reshape(2, 2)
    if qubit == 1:
        amps = direction.conj() @ m
    elif qubit == 2:
        amps = m @ direction.conj()
    else:
        raise ValueError(f"qubit must be 1 or 2, got {qubit!r}")
    return float(np.real(np.vdot(amps, amps)))


def born_local(chi: float, spinor, direction) -> float:
    """The same probability from one qubit's local data alone.

    cos^2(chi/2) |<dir|s>|^2 + sin^2(chi/2) |<dir|P s>|^2, which collapses
    to the ordinary Born rule at chi = 0 and to a flat 1/2 at chi = pi/2.
    The reduced form cos(chi) |<dir|s>|^2 + sin^2(chi/2) is evaluated too
    and the two must agree to 1e-12.
    """
    spinor = as_spinor(spinor)
    direction = as_spinor(direction)
    keep = abs(np.vdot(direction, spinor)) ** 2
    flip = abs(np.vdot(direction, parity(spinor))) ** 2
    p = float(np.cos(chi / 2) ** 2 * keep + np.sin(chi / 2) ** 2 * flip)
    reduced = float(np.cos(chi) * keep + np.sin(chi / 2) ** 2)
    assert abs(p - reduced) <= 1e-12
    return p


def sample_haar(count: int, seed: int) -> np.ndarray:
    """Haar-random pure states, one per row, canonically phase-fixed.

    Eight standard normals per state become four complex amplitudes
    (re, im interleaved), which are normalized and phase-fixed.  Identical
    seeds give bit-identical output.
    """
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((count, 8))
    states = z[:, 0::2] + 1j * z[:, 1::2]
    states /= np.linalg.norm(states, axis=1, keepdims=True)
    return np.array([fix_global_phase(s) for s in states])


def sample_fixed_concurrence(count: int, seed: int, chi: float) -> np.ndarray:
    """States of one exact concurrence angle, one per row.

    Draws cos(theta_i) uniform on [-1, 1] and phi_i, gamma uniform on the
    circle, then builds amplitudes from the six angles.  A coverage sampler
    over the fixed-chi manifold, not the Haar distribution conditioned on
    chi.
    """
    rng = np.random.default_rng(seed)
    out = np.empty((count, 4), dtype=complex)
    for k in range(count):
        theta1 = float(np.arccos(rng.uniform(-1.0, 1.0)))
        theta2 = float(np.arccos(rng.uniform(-1.0, 1.0)))
        phi1 = wrap_angle(rng.uniform(-np.pi, np.pi))
        phi2 = wrap_angle(rng.uniform(-np.pi, np.pi))
        gamma = wrap_angle(rng.uniform(-np.pi, np.pi))
        out[k] = state_from_angles(AngleSet(chi, theta1, phi1, theta2, phi2, gamma))
    return out


def sample_states(spec: SampleSpec) -> np.ndarray:
    """Dispatch on the spec: Haar unless fixed_chi is set."""
    if spec.fixed_chi is None:
        return sample_haar(spec.count, spec.seed)
    return sample_fixed_concurrence(spec.count, spec.seed, spec.fixed_chi)


def oracle_partial_trace(psi, qubit: int) -> np.ndarray:
    """Partial trace the slow way: build the 4x4 projector and sum the
    traced index explicitly.  Validates the closed-form reduced_density."""
    psi = as_state(psi)
    rho4 = np.outer(psi, psi.conj())
    rho = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for k in range(2):
            for j in range(2):
                if qubit == 1:
                    rho[i, k] += rho4[2 * i + j, 2 * k + j]
                elif qubit == 2:
                    rho[i, k] += rho4[i + 2 * j, k + 2 * j]
                else:
                    raise ValueError(f"qubit must be 1 or 2, got {qubit!r}")
    return rho


def oracle_matrix_exp(h: LocalHamiltonian, t: float, include_scalar: bool = False) -> np.ndarray:
    """exp(-iHt) by eigendecomposition, an independent check on the closed
    form su2_operator.  With include_scalar the e^(-i h_i t) factor is kept."""
    m = h.matrix()
    if not include_scalar:
        m = m - h.h_i * np.eye(2)
    w, vecs = np.linalg.eigh(m)
    return vecs @ np.diag(np.exp(-1j * w * t)) @ vecs.conj().T
