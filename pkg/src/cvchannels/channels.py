"""Gaussian channels as (X, Y) pairs acting on covariance matrices.

A channel maps gamma -> X gamma X^t + Y and is physical iff
Y + i(J_out - X J_in X^t) >= 0; it is PPT (entanglement binding, zero quantum
capacity) iff Y + i(J_out + X J_in X^t) >= 0. Both tests reduce to real
symmetric eigenproblems via the doubling embedding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .symplectic import (
    PSD_TOL,
    CovarianceMatrix,
    ShapeError,
    check_uncertainty,
    hermitian_eigenvalues,
    permute_modes,
    symplectic_form,
)

_SQ2 = np.sqrt(2.0)

# Coupling constants of the two-mode squeezer that diagonalizes the noise of
# the boundary channel's circuit frame: plus^2 - minus^2 = 1, plus*minus = 1/2.
BETA_PLUS = np.sqrt(1.0 / _SQ2 + 0.5)
BETA_MINUS = np.sqrt(1.0 / _SQ2 - 0.5)

# Frozen sign convention for the frame-equivalence relation between the
# circuit-frame channel and the boundary channel: the 50% beamsplitter T in
# X = -S X' S^(-1) T must use the reflection convention
# (1/sqrt2)[[I2, I2], [I2, -I2]]; the rotation convention does not satisfy
# the relation. See dilations.beamsplitter_matrix(t, reflect=True).
EQUIVALENCE_BS_REFLECT = True


@dataclass(frozen=True)
class GaussianChannel:
    """Covariance-level channel gamma -> X gamma X^t + Y, displacement d -> X d."""

    X: np.ndarray
    Y: np.ndarray
    name: str | None = None

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        Y = np.asarray(self.Y, dtype=float)
        if X.ndim != 2 or X.shape[0] % 2 or X.shape[1] % 2:
            raise ShapeError(f"X must be 2n_out x 2n_in, got {X.shape}")
        if Y.shape != (X.shape[0], X.shape[0]):
            raise ShapeError(f"Y shape {Y.shape} does not match X output dimension {X.shape[0]}")
        if Y.size and np.abs(Y - Y.T).max() > 1e-8:
            raise ShapeError("Y must be symmetric")
        Xf = np.array(X)
        Yf = np.array(0.5 * (Y + Y.T) if Y.size else Y)
        Xf.flags.writeable = False
        Yf.flags.writeable = False
        object.__setattr__(self, "X", Xf)
        object.__setattr__(self, "Y", Yf)

    @property
    def input_modes(self) -> int:
        return self.X.shape[1] // 2

    @property
    def output_modes(self) -> int:
        return self.X.shape[0] // 2


@dataclass(frozen=True)
class PptVerdict:
    """Outcome of the PPT test, with the full spectrum for boundary diagnostics."""

    is_ppt: bool
    min_eigenvalue: float
    spectrum: np.ndarray


def physicality_spectrum(ch: GaussianChannel) -> np.ndarray:
    """Eigenvalues (ascending) of Y + i(J_out - X J_in X^t)."""
    J_in = symplectic_form(ch.input_modes)
    J_out = symplectic_form(ch.output_modes)
    return hermitian_eigenvalues(ch.Y, J_out - ch.X @ J_in @ ch.X.T)


def ppt_spectrum(ch: GaussianChannel) -> np.ndarray:
    """Eigenvalues (ascending) of Y + i(J_out + X J_in X^t)."""
    J_in = symplectic_form(ch.input_modes)
    J_out = symplectic_form(ch.output_modes)
    return hermitian_eigenvalues(ch.Y, J_out + ch.X @ J_in @ ch.X.T)


def validate_channel(ch: GaussianChannel, tol: float = PSD_TOL) -> bool:
    """True iff the channel is a physical Gaussian map within tol."""
    spec = physicality_spectrum(ch)
    return True if spec.size == 0 else bool(spec.min() >= -tol)


def ppt_check(ch: GaussianChannel, tol: float = PSD_TOL) -> PptVerdict:
    spec = ppt_spectrum(ch)
    mn = 0.0 if spec.size == 0 else float(spec.min())
    return PptVerdict(is_ppt=mn >= -tol, min_eigenvalue=mn, spectrum=spec)


def apply(ch: GaussianChannel, state: CovarianceMatrix) -> CovarianceMatrix:
    if state.modes != ch.input_modes:
        raise ShapeError(f"state has {state.modes} modes, channel expects {ch.input_modes}")
    return CovarianceMatrix(ch.X @ state.gamma @ ch.X.T + ch.Y, ch.X @ state.d)


def apply_partial(ch: GaussianChannel, state: CovarianceMatrix, target_modes) -> CovarianceMatrix:
    """Apply the channel to a subset of modes, identity on the rest.

    When the channel is square (n_out = n_in) the outputs land back in the
    target slots. Otherwise the result orders the untouched modes first (in
    their original relative order) followed by the channel outputs.
    """
    targets = list(target_modes)
    m = state.modes
    if len(set(targets)) != len(targets) or any(t < 0 or t >= m for t in targets):
        raise ValueError(f"target modes {targets} invalid for a {m}-mode state")
    if len(targets) != ch.input_modes:
        raise ValueError(f"channel expects {ch.input_modes} modes, got {len(targets)} targets")
    rest = [k for k in range(m) if k not in targets]
    moved = permute_modes(state, rest + targets)
    n_rest = len(rest)
    X_emb = np.zeros((2 * n_rest + ch.X.shape[0], 2 * n_rest + ch.X.shape[1]))
    X_emb[: 2 * n_rest, : 2 * n_rest] = np.eye(2 * n_rest)
    X_emb[2 * n_rest :, 2 * n_rest :] = ch.X
    Y_emb = np.zeros((X_emb.shape[0], X_emb.shape[0]))
    Y_emb[2 * n_rest :, 2 * n_rest :] = ch.Y
    out = CovarianceMatrix(X_emb @ moved.gamma @ X_emb.T + Y_emb, X_emb @ moved.d)
    if ch.output_modes != ch.input_modes:
        return out
    # permute outputs back into the target slots
    slot_of = {old: new for new, old in enumerate(rest + targets)}
    return permute_modes(out, [slot_of[k] for k in range(m)])


def tensor(ch1: GaussianChannel, ch2: GaussianChannel) -> GaussianChannel:
    """Parallel combination: inputs concatenated, outputs concatenated."""
    X = np.zeros((ch1.X.shape[0] + ch2.X.shape[0], ch1.X.shape[1] + ch2.X.shape[1]))
    X[: ch1.X.shape[0], : ch1.X.shape[1]] = ch1.X
    X[ch1.X.shape[0] :, ch1.X.shape[1] :] = ch2.X
    Y = np.zeros((X.shape[0], X.shape[0]))
    Y[: ch1.Y.shape[0], : ch1.Y.shape[0]] = ch1.Y
    Y[ch1.Y.shape[0] :, ch1.Y.shape[0] :] = ch2.Y
    return GaussianChannel(X, Y)


def compose(outer: GaussianChannel, inner: GaussianChannel) -> GaussianChannel:
    """Serial composition, outer after inner."""
    if inner.output_modes != outer.input_modes:
        raise ShapeError("inner output mode count must match outer input mode count")
    return GaussianChannel(outer.X @ inner.X, outer.X @ inner.Y @ outer.X.T + outer.Y)


def compose_symplectic(
    ch: GaussianChannel,
    S_in: np.ndarray,
    S_out: np.ndarray,
    negate: bool = False,
) -> GaussianChannel:
    """Conjugate by symplectics: X -> +/- S_out X S_in, Y -> S_out Y S_out^t.

    Symplectics correspond to unitaries, so validity, PPT verdict, and the
    coherent-information landscape (up to input reparametrization) are
    unchanged. The sign flag absorbs beamsplitter-convention mismatches.
    """
    S_in = np.asarray(S_in, dtype=float)
    S_out = np.asarray(S_out, dtype=float)
    if S_in.shape != (ch.X.shape[1], ch.X.shape[1]):
        raise ShapeError(f"S_in shape {S_in.shape} does not match channel input")
    if S_out.shape != (ch.X.shape[0], ch.X.shape[0]):
        raise ShapeError(f"S_out shape {S_out.shape} does not match channel output")
    sign = -1.0 if negate else 1.0
    return GaussianChannel(sign * S_out @ ch.X @ S_in, S_out @ ch.Y @ S_out.T)


def identity_channel(modes: int) -> GaussianChannel:
    return GaussianChannel(np.eye(2 * modes), np.zeros((2 * modes, 2 * modes)), name="identity")


def attenuation_channel(t: float) -> GaussianChannel:
    """Single-mode loss: transmitted amplitude sqrt(1-t), vacuum noise t.

    t = 1/2 is the 50% attenuation channel, which is antidegradable and hence
    has zero quantum capacity.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("transmissivity parameter must lie in [0, 1]")
    X = np.sqrt(1.0 - t) * np.eye(2)
    Y = t * np.eye(2)
    return GaussianChannel(X, Y, name=f"attenuation({t:g})")


def boundary_ppt_channel() -> GaussianChannel:
    """The minimal two-mode PPT channel sitting on the PPT boundary.

    Both test matrices Y + i(J +/- X J X^t) have spectrum {0, 0, 2 sqrt2,
    2 sqrt2}: physical, entanglement binding, and exactly on the boundary.
    """
    X = np.array(
        [
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )
    return GaussianChannel(X, _SQ2 * np.eye(4), name="eq1_ppt")


def circuit_frame_ppt_channel() -> GaussianChannel:
    """The same boundary channel expressed in its optical-circuit frame.

    Related to boundary_ppt_channel() by a two-mode squeezer on the output and
    a 50% beamsplitter (reflection convention) with a sign flip on the input;
    the noise term here is non-diagonal.
    """
    X = np.array(
        [
            [_SQ2, 0.0, 1.0, 0.0],
            [0.0, -_SQ2, 0.0, 1.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
        ]
    )
    Y = np.array(
        [
            [2.0, 0.0, -_SQ2, 0.0],
            [0.0, 2.0, 0.0, _SQ2],
            [-_SQ2, 0.0, 2.0, 0.0],
            [0.0, _SQ2, 0.0, 2.0],
        ]
    )
    return GaussianChannel(X, Y, name="eq4_ppt_prime")


def combined_ppt_attenuation_channel() -> GaussianChannel:
    """Three-mode joint channel: boundary PPT block first, 50% attenuation last.

    Each constituent alone has zero quantum capacity; the joint channel
    carries positive coherent information on suitably entangled inputs.
    """
    ch = tensor(boundary_ppt_channel(), attenuation_channel(0.5))
    return GaussianChannel(ch.X, ch.Y, name="eq2_combined")


_ATTENUATION_RE = re.compile(r"^attenuation\((?P<t>[^)]+)\)$")


def resolve_channel(name: str) -> GaussianChannel:
    """Look up a built-in channel by its registry name.

    Known names: eq1_ppt, eq4_ppt_prime, eq2_combined, attenuation(t).
    """
    table = {
        "eq1_ppt": boundary_ppt_channel,
        "eq4_ppt_prime": circuit_frame_ppt_channel,
        "eq2_combined": combined_ppt_attenuation_channel,
    }
    if name in table:
        return table[name]()
    m = _ATTENUATION_RE.match(name.strip())
    if m:
        try:
            t = float(m.group("t"))
        except ValueError as exc:
            raise ValueError(f"bad attenuation parameter in {name!r}") from exc
        return attenuation_channel(t)
    raise KeyError(f"unknown channel name {name!r}")


def assert_valid_output(ch: GaussianChannel, state: CovarianceMatrix, tol: float = PSD_TOL) -> CovarianceMatrix:
    """Apply and verify the output satisfies the uncertainty relation."""
    out = apply(ch, state)
    if not check_uncertainty(out.gamma, tol):
        raise ValueError("channel output violates the uncertainty relation")
    return out
