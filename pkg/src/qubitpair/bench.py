"""Head-to-head timing of the 4x4 and two-spinor evolution backends.

Both backends walk the same seeded piecewise-constant schedule, step by
step, recomputing their per-step operators as a simulator driven by
changing fields would.  Only the pure evolution loops are timed (monotonic
clock, median across trials); the one-off decomposition and reconstruction
bracketing the separable run stay outside the clock.  End states are
compared exactly, ledger phase applied, so the timings are certified to
describe equivalent computations.  The speedup is informational: at 2x2
vs 4x4 scale, constant overheads can dominate.
"""

from __future__ import annotations

import dataclasses
import time

import numpy as np

from .dynamics import LocalHamiltonian, PhaseLedger, local_unitary, su2_operator
from .measurement import sample_haar
from .states import SpinorDecomposition, decompose, reconstruct

DEVIATION_BOUND = 1e-9
LOW_CONFIDENCE_STEPS = 1000


@dataclasses.dataclass
class BenchReport:
    steps: int
    trials: int
    ns_per_step_full: float
    ns_per_step_separable: float
    speedup: float
    max_deviation: float
    status: str             # VALID iff max_deviation < 1e-9
    timing_confidence: str  # LOW_CONFIDENCE below 1000 steps

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _make_schedule(rng: np.random.Generator, steps: int):
    hams1, hams2, dts = [], [], []
    for _ in range(steps):
        hams1.append(LocalHamiltonian(float(rng.normal()), rng.normal(size=3)))
        hams2.append(LocalHamiltonian(float(rng.normal()), rng.normal(size=3)))
        dts.append(float(rng.uniform(0.01, 0.1)))
    return hams1, hams2, dts


def _run_full(psi, hams1, hams2, dts):
    start = time.perf_counter_ns()
    for h1, h2, dt in zip(hams1, hams2, dts):
        psi = np.kron(local_unitary(h1, dt), local_unitary(h2, dt)) @ psi
    return psi, time.perf_counter_ns() - start


def _run_separable(d, hams1, hams2, dts):
    s1, s2 = d.spinor1, d.spinor2
    beta1 = beta2 = 0.0
    start = time.perf_counter_ns()
    for h1, h2, dt in zip(hams1, hams2, dts):
        s1 = su2_operator(h1, dt) @ s1
        s2 = su2_operator(h2, dt) @ s2
        beta1 += h1.h_i * dt
        beta2 += h2.h_i * dt
    elapsed = time.perf_counter_ns() - start
    return SpinorDecomposition(d.chi, s1, s2), PhaseLedger(beta1, beta2), elapsed


def run_benchmark(steps: int, trials: int, seed: int) -> BenchReport:
    """Time `steps` evolution steps on each backend, `trials` times."""
    if steps < 1 or trials < 1:
        raise ValueError("steps and trials must be at least 1")
    rng = np.random.default_rng(seed)
    hams1, hams2, dts = _make_schedule(rng, steps)
    psi0 = sample_haar(1, seed)[0]
    d0 = decompose(psi0)

    full_ns, sep_ns, deviations = [], [], []
    for _ in range(trials):
        psi_full, t_full = _run_full(psi0.copy(), hams1, hams2, dts)
        d_end, ledger, t_sep = _run_separable(d0, hams1, hams2, dts)
        psi_sep = ledger.phase * reconstruct(d_end)
        deviations.append(float(np.max(np.abs(psi_full - psi_sep))))
        full_ns.append(t_full / steps)
        sep_ns.append(t_sep / steps)

    ns_full = float(np.median(full_ns))
    ns_sep = float(np.median(sep_ns))
    max_dev = max(deviations)
    return BenchReport(
        steps=steps,
        trials=trials,
        ns_per_step_full=ns_full,
        ns_per_step_separable=ns_sep,
        speedup=ns_full / ns_sep if ns_sep > 0 else float("inf"),
        max_deviation=max_dev,
        status="VALID" if max_dev < DEVIATION_BOUND else "INVALID",
        timing_confidence="OK" if steps >= LOW_CONFIDENCE_STEPS else "LOW_CONFIDENCE",
    )
