"""Seeded random ensembles shared across test modules.

All generators take an explicit numpy Generator so every test is reproducible
from its own seed. The pure-state ensemble keeps squeezing at or below 10 dB
(quadrature scale sqrt(10)); thermal products stay at or below 20 photons per
mode.
"""

from __future__ import annotations

import numpy as np

from cvchannels import (
    Beamsplitter,
    CovarianceMatrix,
    GaussianChannel,
    HalfWavePlate,
    OpticalCircuit,
    Squeezer,
    TwoModeSqueezer,
    channel_of,
    compile_circuit,
    complement,
    dilation_from_circuit,
    state_from_symplectic,
)

MAX_SQUEEZE = np.sqrt(10.0)  # 10 dB


def random_circuit(rng: np.random.Generator, modes: int, max_gates: int = 12) -> OpticalCircuit:
    n_gates = int(rng.integers(1, max_gates + 1))
    gates = []
    for _ in range(n_gates):
        kinds = ["squeezer", "halfwave"] if modes == 1 else ["beamsplitter", "squeezer", "halfwave", "tms"]
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "beamsplitter":
            pair = tuple(int(v) for v in rng.choice(modes, size=2, replace=False))
            gates.append(Beamsplitter(float(rng.uniform(0.0, 1.0)), pair, bool(rng.integers(2))))
        elif kind == "squeezer":
            s = float(10.0 ** rng.uniform(-0.5, 0.5))  # within +/- 10 dB
            gates.append(Squeezer(s, int(rng.integers(modes))))
        elif kind == "halfwave":
            gates.append(HalfWavePlate(int(rng.integers(modes)), float(rng.uniform(0.0, 2 * np.pi))))
        else:
            pair = tuple(int(v) for v in rng.choice(modes, size=2, replace=False))
            gates.append(TwoModeSqueezer(float(rng.uniform(0.0, 1.0)), pair))
    return OpticalCircuit(modes=modes, gates=tuple(gates))


def random_symplectic(rng: np.random.Generator, modes: int) -> np.ndarray:
    return compile_circuit(random_circuit(rng, modes))


def random_pure_state(rng: np.random.Generator, modes: int) -> CovarianceMatrix:
    return state_from_symplectic(random_symplectic(rng, modes))


def random_thermal_product(rng: np.random.Generator, modes: int, max_photons: float = 20.0) -> CovarianceMatrix:
    diag = np.repeat(2.0 * rng.uniform(0.0, max_photons, size=modes) + 1.0, 2)
    return CovarianceMatrix(np.diag(diag))


def random_state(rng: np.random.Generator, modes: int) -> CovarianceMatrix:
    """Thermal product conjugated by a random circuit symplectic (mixed, generic)."""
    S = random_symplectic(rng, modes)
    g = random_thermal_product(rng, modes, max_photons=5.0).gamma
    return CovarianceMatrix(S @ g @ S.T)


def random_input_ensemble(rng: np.random.Generator, modes: int, count: int) -> list[CovarianceMatrix]:
    """Half circuit-generated pure states, half thermal products."""
    states = [random_pure_state(rng, modes) for _ in range(count // 2)]
    states += [random_thermal_product(rng, modes) for _ in range(count - len(states))]
    return states


def random_channel_with_dilation(rng: np.random.Generator, max_modes: int = 4):
    """(channel, complement, dilation) from a random circuit and partition."""
    n = int(rng.integers(2, max_modes + 1))
    circuit = random_circuit(rng, n, max_gates=8)
    n_in = int(rng.integers(1, n))
    n_out = int(rng.integers(1, n))
    perm_in = [int(v) for v in rng.permutation(n)]
    perm_out = [int(v) for v in rng.permutation(n)]
    d = dilation_from_circuit(
        circuit, perm_in[:n_in], perm_in[n_in:], perm_out[:n_out], perm_out[n_out:]
    )
    return channel_of(d), complement(d), d


def assert_channels_close(a: GaussianChannel, b: GaussianChannel, tol: float = 1e-12) -> None:
    assert a.X.shape == b.X.shape
    assert np.abs(a.X - b.X).max() <= tol
    assert np.abs(a.Y - b.Y).max() <= tol
