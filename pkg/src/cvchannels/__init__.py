"""Numerical toolkit for Gaussian bosonic channels in the covariance-matrix
picture: symplectic linear algebra, channel physicality and PPT tests,
dilation circuits, coherent information, and deterministic parameter sweeps.
"""

from .symplectic import (
    PSD_TOL,
    SYMPLECTIC_TOL,
    PAIRING_TOL,
    CovarianceMatrix,
    DecompositionError,
    DegeneracyError,
    ShapeError,
    SpectrumError,
    check_uncertainty,
    entropy,
    hermitian_eigenvalues,
    is_symplectic,
    permutation_symplectic,
    permute_modes,
    purify,
    reduce_to_modes,
    state_from_symplectic,
    symplectic_eigenvalues,
    symplectic_form,
    thermal_state,
    vacuum_state,
    williamson,
)
from .channels import (
    BETA_MINUS,
    BETA_PLUS,
    EQUIVALENCE_BS_REFLECT,
    GaussianChannel,
    PptVerdict,
    apply,
    apply_partial,
    attenuation_channel,
    boundary_ppt_channel,
    circuit_frame_ppt_channel,
    combined_ppt_attenuation_channel,
    compose,
    compose_symplectic,
    identity_channel,
    physicality_spectrum,
    ppt_check,
    ppt_spectrum,
    resolve_channel,
    tensor,
    validate_channel,
)
from .dilations import (
    Beamsplitter,
    ChannelDilation,
    HalfWavePlate,
    OpticalCircuit,
    QuadraticHamiltonian,
    Squeezer,
    TwoModeSqueezer,
    attenuation_dilation,
    beamsplitter_matrix,
    boundary_ppt_extension,
    channel_from_circuit,
    channel_of,
    circuit_from_json,
    circuit_to_json,
    combined_ppt_attenuation_dilation,
    compile_circuit,
    complement,
    dilation_from_circuit,
    embed_symplectic,
    evolve,
    halfwave_matrix,
    squeezer_matrix,
    two_mode_squeezer_matrix,
    verify_extension,
)
from .capacity import (
    ALPHA_MINUS,
    ALPHA_PLUS,
    CoherentInfoResult,
    attenuation_complement,
    builtin_complement,
    builtin_dilation,
    coherent_information,
    coherent_information_via_purification,
    constituent_inputs,
    input_family,
    maximize_over_c,
    photon_number,
    wired_input,
)
from .sweeps import (
    AxisSpec,
    SweepRecord,
    SweepSpec,
    SweepSummary,
    grid_coordinates,
    render_csv,
    render_json,
    run_sweep,
    summarize,
    sweep_spec_from_json,
    write_records,
)

__version__ = "0.1.0"

__all__ = [
    "PSD_TOL",
    "SYMPLECTIC_TOL",
    "PAIRING_TOL",
    "CovarianceMatrix",
    "DecompositionError",
    "DegeneracyError",
    "ShapeError",
    "SpectrumError",
    "check_uncertainty",
    "entropy",
    "hermitian_eigenvalues",
    "is_symplectic",
    "permutation_symplectic",
    "permute_modes",
    "purify",
    "reduce_to_modes",
    "state_from_symplectic",
    "symplectic_eigenvalues",
    "symplectic_form",
    "thermal_state",
    "vacuum_state",
    "williamson",
    "BETA_MINUS",
    "BETA_PLUS",
    "EQUIVALENCE_BS_REFLECT",
    "GaussianChannel",
    "PptVerdict",
    "apply",
    "apply_partial",
    "attenuation_channel",
    "boundary_ppt_channel",
    "circuit_frame_ppt_channel",
    "combined_ppt_attenuation_channel",
    "compose",
    "compose_symplectic",
    "identity_channel",
    "physicality_spectrum",
    "ppt_check",
    "ppt_spectrum",
    "resolve_channel",
    "tensor",
    "validate_channel",
    "Beamsplitter",
    "ChannelDilation",
    "HalfWavePlate",
    "OpticalCircuit",
    "QuadraticHamiltonian",
    "Squeezer",
    "TwoModeSqueezer",
    "attenuation_dilation",
    "beamsplitter_matrix",
    "boundary_ppt_extension",
    "channel_from_circuit",
    "channel_of",
    "circuit_from_json",
    "circuit_to_json",
    "combined_ppt_attenuation_dilation",
    "compile_circuit",
    "complement",
    "dilation_from_circuit",
    "embed_symplectic",
    "evolve",
    "halfwave_matrix",
    "squeezer_matrix",
    "two_mode_squeezer_matrix",
    "verify_extension",
    "ALPHA_MINUS",
    "ALPHA_PLUS",
    "CoherentInfoResult",
    "attenuation_complement",
    "builtin_complement",
    "builtin_dilation",
    "coherent_information",
    "coherent_information_via_purification",
    "constituent_inputs",
    "input_family",
    "maximize_over_c",
    "photon_number",
    "wired_input",
    "AxisSpec",
    "SweepRecord",
    "SweepSpec",
    "SweepSummary",
    "grid_coordinates",
    "render_csv",
    "render_json",
    "run_sweep",
    "summarize",
    "sweep_spec_from_json",
    "write_records",
    "__version__",
]
