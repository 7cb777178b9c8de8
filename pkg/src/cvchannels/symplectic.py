"""Phase-space linear algebra for Gaussian bosonic states.

Everything works on real covariance matrices in the interleaved quadrature
ordering (q1, p1, ..., qm, pm), vacuum-normalized so the vacuum covariance is
the identity. Entropies are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import schur

# Default numeric tolerances. PSD_TOL admits boundary states (the interesting
# channels sit exactly on the PPT boundary with a zero eigenvalue);
# SYMPLECTIC_TOL bounds max|SJS^t - J|; PAIRING_TOL governs +/- i*lambda
# pairing in the symplectic eigensolver. All overridable per call.
PSD_TOL = 1e-9
SYMPLECTIC_TOL = 1e-10
PAIRING_TOL = 1e-8


class ShapeError(ValueError):
    """Matrix or vector has the wrong shape, symmetry, or dimension parity."""


class DegeneracyError(ArithmeticError):
    """Eigenvalues failed to pair up; the input is invalid or ill-conditioned."""


class DecompositionError(ArithmeticError):
    """Normal-form decomposition failed (singular or indefinite input)."""


class SpectrumError(ValueError):
    """A symplectic spectrum entry is below the physical floor of 1."""


_J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def symplectic_form(modes: int) -> np.ndarray:
    """Block-diagonal J with one [[0,1],[-1,0]] block per mode."""
    J = np.zeros((2 * modes, 2 * modes))
    for k in range(modes):
        J[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = _J2
    return J


def _mode_indices(modes: "list[int] | tuple[int, ...]") -> list[int]:
    idx: list[int] = []
    for m in modes:
        idx += [2 * m, 2 * m + 1]
    return idx


def _as_gamma(obj) -> np.ndarray:
    return obj.gamma if isinstance(obj, CovarianceMatrix) else np.asarray(obj, dtype=float)


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class CovarianceMatrix:
    """A Gaussian state: symmetric 2m x 2m covariance plus a displacement vector.

    Displacements are carried through channel maps for bookkeeping but never
    enter entropies. Construction checks shape and symmetry only; physicality
    is a separate, tolerance-parameterized question (check_uncertainty).
    """

    gamma: np.ndarray
    d: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        g = np.asarray(self.gamma, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] % 2:
            raise ShapeError(f"covariance must be square with even dimension, got {g.shape}")
        if g.size and np.abs(g - g.T).max() > 1e-8:
            raise ShapeError("covariance must be symmetric")
        d = np.zeros(g.shape[0]) if self.d is None else np.asarray(self.d, dtype=float)
        if d.shape != (g.shape[0],):
            raise ShapeError(f"displacement length {d.shape} does not match dimension {g.shape[0]}")
        object.__setattr__(self, "gamma", _frozen(0.5 * (g + g.T) if g.size else g))
        object.__setattr__(self, "d", _frozen(d))

    @property
    def modes(self) -> int:
        return self.gamma.shape[0] // 2


def vacuum_state(modes: int) -> CovarianceMatrix:
    return CovarianceMatrix(np.eye(2 * modes))


def thermal_state(n_photons: float, modes: int = 1) -> CovarianceMatrix:
    """Product of identical thermal modes, covariance (2n+1) per quadrature."""
    if n_photons < 0:
        raise ValueError("mean photon number must be non-negative")
    return CovarianceMatrix((2.0 * n_photons + 1.0) * np.eye(2 * modes))


def state_from_symplectic(S: np.ndarray) -> CovarianceMatrix:
    """Pure state S S^t obtained by acting on the vacuum with S."""
    S = np.asarray(S, dtype=float)
    return CovarianceMatrix(S @ S.T)


def is_symplectic(S: np.ndarray, tol: float = SYMPLECTIC_TOL) -> bool:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2:
        return False
    J = symplectic_form(S.shape[0] // 2)
    return bool(np.abs(S @ J @ S.T - J).max() <= tol) if S.size else True


def assert_symplectic(S: np.ndarray, tol: float = SYMPLECTIC_TOL) -> None:
    if not is_symplectic(S, tol):
        raise ShapeError("matrix is not symplectic within tolerance")


def hermitian_eigenvalues(sym: np.ndarray, antisym: np.ndarray) -> np.ndarray:
    """Eigenvalues of the Hermitian matrix sym + i*antisym, ascending.

    Uses the real embedding [[sym, -antisym], [antisym, sym]], which doubles
    every eigenvalue's multiplicity, so only real symmetric solvers are needed.
    """
    A = np.asarray(sym, dtype=float)
    B = np.asarray(antisym, dtype=float)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError("operands must be square matrices of equal shape")
    if A.size == 0:
        return np.zeros(0)
    emb = np.block([[A, -B], [B, A]])
    return np.linalg.eigvalsh(emb)[::2]


def check_uncertainty(gamma, tol: float = PSD_TOL) -> bool:
    """True iff gamma + iJ is positive semidefinite within tol."""
    g = _as_gamma(gamma)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] % 2:
        raise ShapeError(f"expected a square even-dimensional matrix, got {g.shape}")
    if g.size and np.abs(g - g.T).max() > max(tol, 1e-8):
        raise ShapeError("covariance must be symmetric")
    if g.size == 0:
        return True
    w = hermitian_eigenvalues(g, symplectic_form(g.shape[0] // 2))
    return bool(w.min() >= -tol)


def symplectic_eigenvalues(state, pairing_tol: float = PAIRING_TOL) -> np.ndarray:
    """The m symplectic eigenvalues of a covariance matrix, descending.

    Eigenvalues of J*gamma come in pairs +/- i*lambda_j; each pair is collapsed
    to one lambda_j. Raises DegeneracyError when real parts or pair mismatches
    exceed the pairing tolerance (scaled by the matrix magnitude).
    """
    g = _as_gamma(state)
    m = g.shape[0] // 2
    if m == 0:
        return np.zeros(0)
    ev = np.linalg.eigvals(symplectic_form(m) @ g)
    scale = max(1.0, float(np.abs(g).max()))
    if np.abs(ev.real).max() > pairing_tol * scale:
        raise DegeneracyError("eigenvalues of J*gamma are not purely imaginary")
    lam = np.sort(np.abs(ev.imag))[::-1]
    if np.abs(lam[0::2] - lam[1::2]).max() > pairing_tol * scale:
        raise DegeneracyError("eigenvalues of J*gamma do not pair up")
    return lam[0::2]


def entropy(spectrum, tol: float = PSD_TOL) -> float:
    """Von Neumann entropy in bits from a symplectic spectrum.

    g(v) = ((v+1)/2) log2((v+1)/2) - ((v-1)/2) log2((v-1)/2), summed over the
    spectrum; entries within tol below 1 are clamped to 1 and contribute 0.
    """
    lam = np.atleast_1d(np.asarray(spectrum, dtype=float))
    if lam.size == 0:
        return 0.0
    if lam.min() < 1.0 - tol:
        raise SpectrumError(f"symplectic eigenvalue {lam.min()} below 1")
    lam = np.maximum(lam, 1.0)
    up = (lam + 1.0) / 2.0
    dn = (lam - 1.0) / 2.0
    # 0*log(0) -> 0 at the pure-state limit
    dn_term = np.where(dn > 0.0, dn * np.log2(np.where(dn > 0.0, dn, 1.0)), 0.0)
    return float(np.sum(up * np.log2(up) - dn_term))


def williamson(state) -> tuple[np.ndarray, np.ndarray]:
    """Williamson normal form: S with S gamma S^t = diag(l1, l1, ..., lm, lm).

    Returns (S, spectrum) with the spectrum descending. Route: real Schur form
    of gamma^(-1/2) J gamma^(-1/2), whose 2x2 blocks carry 1/lambda_j; this
    handles degenerate spectra without any special casing.
    """
    g = _as_gamma(state)
    m = g.shape[0] // 2
    if m == 0:
        return np.zeros((0, 0)), np.zeros(0)
    w, U = np.linalg.eigh(g)
    if w.min() <= 0:
        raise DecompositionError("covariance must be strictly positive definite")
    inv_sqrt = U @ np.diag(w**-0.5) @ U.T
    B = inv_sqrt @ symplectic_form(m) @ inv_sqrt  # antisymmetric, nonsingular
    T, Q = schur(B)
    lams = np.zeros(m)
    for k in range(m):
        c = T[2 * k, 2 * k + 1]
        if abs(c) < 1e-300:
            raise DecompositionError("Schur form lacks the expected 2x2 block structure")
        if c < 0:
            Q[:, [2 * k, 2 * k + 1]] = Q[:, [2 * k + 1, 2 * k]]
            c = -c
        lams[k] = 1.0 / c
    S0 = np.diag(np.repeat(np.sqrt(lams), 2)) @ Q.T @ inv_sqrt
    order = np.argsort(-lams, kind="stable")
    P = np.zeros((2 * m, 2 * m))
    for new, old in enumerate(order):
        P[2 * new : 2 * new + 2, 2 * old : 2 * old + 2] = np.eye(2)
    S = P @ S0
    lams = lams[order]
    target = np.diag(np.repeat(lams, 2))
    scale = max(1.0, float(np.abs(g).max()))
    if np.abs(S @ g @ S.T - target).max() > 1e-7 * scale or not is_symplectic(S, 1e-8):
        raise DecompositionError("Williamson decomposition failed the residual check")
    return S, lams


def purify(state: CovarianceMatrix) -> CovarianceMatrix:
    """Pure 2m-mode extension whose first m modes reduce to the input state.

    Standard two-mode-squeezing construction on the Williamson frame: each
    mode with symplectic eigenvalue lambda is paired with a reference mode,
    coupled with strength sqrt(lambda^2 - 1).
    """
    g = _as_gamma(state)
    m = g.shape[0] // 2
    S, lams = williamson(state)
    S_inv = np.linalg.inv(S)
    C = np.zeros((2 * m, 2 * m))
    for k in range(m):
        r = np.sqrt(max(lams[k] ** 2 - 1.0, 0.0))
        C[2 * k, 2 * k] = r
        C[2 * k + 1, 2 * k + 1] = -r
    D = np.diag(np.repeat(lams, 2))
    coupling = S_inv @ C
    gp = np.block([[g, coupling], [coupling.T, D]])
    d = state.d if isinstance(state, CovarianceMatrix) else np.zeros(2 * m)
    return CovarianceMatrix(gp, np.concatenate([d, np.zeros(2 * m)]))


def reduce_to_modes(state: CovarianceMatrix, modes) -> CovarianceMatrix:
    """Partial trace keeping the listed modes, in the listed order."""
    keep = list(modes)
    if len(set(keep)) != len(keep) or any(m < 0 or m >= state.modes for m in keep):
        raise ShapeError(f"mode list {keep} invalid for a {state.modes}-mode state")
    idx = _mode_indices(keep)
    return CovarianceMatrix(state.gamma[np.ix_(idx, idx)], state.d[idx])


def permutation_symplectic(order) -> np.ndarray:
    """Mode-permutation matrix: new mode k is old mode order[k]."""
    order = list(order)
    if sorted(order) != list(range(len(order))):
        raise ShapeError(f"{order} is not a permutation of 0..{len(order) - 1}")
    P = np.zeros((2 * len(order), 2 * len(order)))
    for new, old in enumerate(order):
        P[2 * new : 2 * new + 2, 2 * old : 2 * old + 2] = np.eye(2)
    return P


def permute_modes(state: CovarianceMatrix, order) -> CovarianceMatrix:
    if len(list(order)) != state.modes:
        raise ShapeError("permutation length must equal the mode count")
    P = permutation_symplectic(order)
    return CovarianceMatrix(P @ state.gamma @ P.T, P @ state.d)
