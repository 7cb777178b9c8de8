"""Coherent information of Gaussian channels and the superactivating input family.

The coherent information H(B) - H(E) is computed two independent ways: directly
from a channel/complement pair, and through a purified reference plus the full
dilation symplectic. Both paths must agree for any input, which is the main
internal cross-check of the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import GaussianChannel, apply, tensor
from .dilations import (
    ChannelDilation,
    attenuation_dilation,
    boundary_ppt_extension,
    channel_of,
    combined_ppt_attenuation_dilation,
    complement,
)
from .symplectic import (
    CovarianceMatrix,
    entropy,
    permute_modes,
    purify,
    reduce_to_modes,
    symplectic_eigenvalues,
)

_SQ2 = np.sqrt(2.0)

# Couplings of the three-mode input family; alpha_plus^2 - alpha_minus^2 = 1.
ALPHA_PLUS = np.sqrt(7.0 / _SQ2 + 2.0 * np.sqrt(3.0) + 0.5)
ALPHA_MINUS = np.sqrt(7.0 / _SQ2 + 2.0 * np.sqrt(3.0) - 0.5)

# cosh(c) overflow guard: above this the family is too ill-conditioned to trust
# in double precision. Configurable per call.
C_MAX_DEFAULT = 12.0


def input_family(c: float, c_max: float = C_MAX_DEFAULT) -> CovarianceMatrix:
    """The one-parameter three-mode input family that superactivates the
    combined PPT + attenuation channel.

    Mode 1 carries the bulk of the power (7 cosh c on the diagonal) and is the
    one routed to the attenuation arm; modes 2 and 3 form the pair routed to
    the PPT channel. The state is mixed for every c: its symplectic spectrum is
    {sqrt(det gamma), 1, 1}. Coherent information of the combined channel on
    this family is positive for every c > 0.
    """
    if c < 0:
        raise ValueError("family parameter c must be non-negative")
    if c > c_max:
        raise ValueError(f"family parameter c = {c} exceeds the conditioning guard {c_max}")
    ch, sh = np.cosh(c), np.sinh(c)
    ap, am = ALPHA_PLUS, ALPHA_MINUS
    g = np.array(
        [
            [7 * ch, 0, ap * sh, 0, am * sh, 0],
            [0, 7 * ch, 0, -ap * sh, 0, am * sh],
            [ap * sh, 0, _SQ2 * ch, 0, ch, 0],
            [0, -ap * sh, 0, _SQ2 * ch, 0, -ch],
            [am * sh, 0, ch, 0, _SQ2 * ch, 0],
            [0, am * sh, 0, -ch, 0, _SQ2 * ch],
        ]
    )
    return CovarianceMatrix(g)


def wired_input(c: float, c_max: float = C_MAX_DEFAULT) -> CovarianceMatrix:
    """input_family(c) permuted to the combined channel's mode order.

    The combined channel puts the PPT block on modes 1-2 and the attenuation
    on mode 3, so the family's power-carrying first mode moves to the back.
    """
    return permute_modes(input_family(c, c_max), [1, 2, 0])


def constituent_inputs(c: float, c_max: float = C_MAX_DEFAULT) -> tuple[CovarianceMatrix, CovarianceMatrix]:
    """Reductions of the family matching each constituent channel alone:
    (two-mode input for the PPT channel, one-mode input for the attenuation).
    """
    fam = input_family(c, c_max)
    return reduce_to_modes(fam, [1, 2]), reduce_to_modes(fam, [0])


def photon_number(state: CovarianceMatrix) -> float:
    """Mean photon count over all modes: (tr gamma + |d|^2 - 2m) / 4."""
    return float((np.trace(state.gamma) + state.d @ state.d - 2.0 * state.modes) / 4.0)


@dataclass(frozen=True)
class CoherentInfoResult:
    value: float  # bits; always output_entropy - environment_entropy
    output_entropy: float
    environment_entropy: float
    photon_number: float


def coherent_information(
    ch: GaussianChannel,
    ch_complement: GaussianChannel,
    input_state: CovarianceMatrix,
) -> CoherentInfoResult:
    """H(B) - H(E) for a given channel, its complement, and an input state."""
    if input_state.modes != ch.input_modes:
        raise ValueError(f"input has {input_state.modes} modes, channel expects {ch.input_modes}")
    if ch_complement.input_modes != ch.input_modes:
        raise ValueError("complement must share the channel's input space")
    h_out = entropy(symplectic_eigenvalues(apply(ch, input_state)))
    h_env = entropy(symplectic_eigenvalues(apply(ch_complement, input_state)))
    return CoherentInfoResult(
        value=h_out - h_env,
        output_entropy=h_out,
        environment_entropy=h_env,
        photon_number=photon_number(input_state),
    )


def coherent_information_via_purification(
    ch: GaussianChannel,
    dilation: ChannelDilation,
    input_state: CovarianceMatrix,
) -> CoherentInfoResult:
    """Cross-validation path: purify the input and push it through the full
    dilation symplectic.

    The reference modes purifying the input ride along untouched; with the
    global state pure, the environment entropy equals the entropy of the
    (output + reference) reduction, so the value is H(B) - H(B,R). Agrees with
    the direct path for any input, mixed or pure.
    """
    m = input_state.modes
    if m != dilation.input_modes or ch.input_modes != m:
        raise ValueError("input, channel, and dilation mode counts must agree")
    induced = channel_of(dilation)
    if (
        induced.X.shape != ch.X.shape
        or np.abs(induced.X - ch.X).max() > 1e-8
        or np.abs(induced.Y - ch.Y).max() > 1e-8
    ):
        raise ValueError("dilation does not induce the given channel")
    pure = purify(input_state)  # modes [A'(m), R(m)]
    anc = dilation.ancilla_modes
    gamma_ext = np.eye(2 * (2 * m + anc))
    gamma_ext[: 4 * m, : 4 * m] = pure.gamma
    d_ext = np.zeros(2 * (2 * m + anc))
    d_ext[: 4 * m] = pure.d
    glob = CovarianceMatrix(gamma_ext, d_ext)  # [A', R, E']
    order = list(range(m)) + list(range(2 * m, 2 * m + anc)) + list(range(m, 2 * m))
    glob = permute_modes(glob, order)  # [A', E', R]
    n_dil = dilation.input_modes + dilation.ancilla_modes
    S_tot = np.eye(2 * (n_dil + m))
    S_tot[: 2 * n_dil, : 2 * n_dil] = dilation.S
    out_gamma = S_tot @ glob.gamma @ S_tot.T
    out = CovarianceMatrix(out_gamma, S_tot @ glob.d)  # [B, E, R]
    n_out, n_env = dilation.output_modes, dilation.environment_modes
    b_modes = list(range(n_out))
    br_modes = b_modes + list(range(n_out + n_env, n_out + n_env + m))
    h_out = entropy(symplectic_eigenvalues(reduce_to_modes(out, b_modes)))
    h_env = entropy(symplectic_eigenvalues(reduce_to_modes(out, br_modes)))
    return CoherentInfoResult(
        value=h_out - h_env,
        output_entropy=h_out,
        environment_entropy=h_env,
        photon_number=photon_number(input_state),
    )


def attenuation_complement(t: float) -> GaussianChannel:
    """Complement of the attenuation channel, positive-sign convention.

    The beamsplitter dilation emits X_E = -sqrt(t) I; the sign is cosmetic
    (a congruence by -I), so the built-in uses +sqrt(t) I.
    """
    comp = complement(attenuation_dilation(t))
    return GaussianChannel(np.abs(comp.X), comp.Y)


def builtin_complement(name: str) -> GaussianChannel:
    """Complement channels for the built-ins that have closed-form dilations."""
    if name == "eq1_ppt":
        return complement(boundary_ppt_extension())
    if name == "eq2_combined":
        return tensor(complement(boundary_ppt_extension()), attenuation_complement(0.5))
    if name.startswith("attenuation("):
        from .channels import resolve_channel

        t = 1.0 - resolve_channel(name).X[0, 0] ** 2
        return attenuation_complement(t)
    raise KeyError(f"no built-in complement for channel {name!r}")


def builtin_dilation(name: str) -> ChannelDilation:
    if name == "eq1_ppt":
        return boundary_ppt_extension()
    if name == "eq2_combined":
        return combined_ppt_attenuation_dilation()
    if name.startswith("attenuation("):
        from .channels import resolve_channel

        t = 1.0 - resolve_channel(name).X[0, 0] ** 2
        return attenuation_dilation(t)
    raise KeyError(f"no built-in dilation for channel {name!r}")


def maximize_over_c(
    ch: GaussianChannel,
    ch_complement: GaussianChannel,
    c_range: tuple[float, float],
    budget: int,
    c_max: float = C_MAX_DEFAULT,
) -> tuple[float, CoherentInfoResult]:
    """Maximize coherent information over the input family parameter c.

    Coarse grid scan followed by golden-section refinement on the bracket
    around the best grid point. Deterministic for a fixed budget; ties go to
    the smallest c. Restricted to three-mode channels since the family is the
    only input class swept.
    """
    if budget < 3:
        raise ValueError("budget must be at least 3 evaluations")
    lo, hi = float(c_range[0]), float(c_range[1])
    if not 0.0 <= lo <= hi <= c_max:
        raise ValueError(f"c range must satisfy 0 <= lo <= hi <= {c_max}")
    if ch.input_modes != 3:
        raise ValueError("optimization sweeps the three-mode input family; channel must take 3 modes")

    cache: dict[float, CoherentInfoResult] = {}

    def f(c: float) -> float:
        if c not in cache:
            cache[c] = coherent_information(ch, ch_complement, wired_input(c, c_max))
        return cache[c].value

    if hi == lo:
        f(lo)
        return lo, cache[lo]

    n_coarse = max(3, budget // 2)
    grid = np.linspace(lo, hi, n_coarse)
    values = [f(c) for c in grid]
    k = int(np.argmax(values))  # first max wins: smallest c on ties
    best_c, best_v = float(grid[k]), values[k]

    a = float(grid[max(k - 1, 0)])
    b = float(grid[min(k + 1, n_coarse - 1)])
    remaining = budget - n_coarse
    phi = (np.sqrt(5.0) - 1.0) / 2.0
    x1 = b - phi * (b - a)
    x2 = a + phi * (b - a)
    if remaining >= 2:
        f1, f2 = f(x1), f(x2)
        remaining -= 2
        while remaining > 0:
            if f1 >= f2:  # keep the left bracket on ties: smaller c
                b, x2, f2 = x2, x1, f1
                x1 = b - phi * (b - a)
                f1 = f(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + phi * (b - a)
                f2 = f(x2)
            remaining -= 1
        for c, v in ((x1, f1), (x2, f2)):
            if v > best_v or (v == best_v and c < best_c):
                best_c, best_v = float(c), v
    return best_c, cache[best_c]
