"""Two presentations of the same PPT channel, and where its joint rate peaks.

The boundary channel has a compact matrix form and an optical-circuit form.
They look nothing alike at first glance; conjugating the circuit form by the right
squeezer/beamsplitter pair (with a sign flip) lands exactly on the matrix
form. Only the reflection beamsplitter convention works here, a rotation
convention leaves a residual.
"""

import numpy as np

from cvchannels import (
    BETA_MINUS,
    beamsplitter_matrix,
    boundary_ppt_channel,
    builtin_complement,
    circuit_frame_ppt_channel,
    combined_ppt_attenuation_channel,
    compose_symplectic,
    maximize_over_c,
    ppt_spectrum,
    two_mode_squeezer_matrix,
)

plain = boundary_ppt_channel()
primed = circuit_frame_ppt_channel()

print("circuit-frame channel X':")
print(np.array_str(primed.X, precision=4, suppress_small=True))
print("both frames sit on the PPT boundary (two zero eigenvalues each),")
print("even though the spectra themselves differ:")
print("  plain :", np.round(ppt_spectrum(plain), 9).tolist())
print("  primed:", np.round(ppt_spectrum(primed), 9).tolist())

S = two_mode_squeezer_matrix(BETA_MINUS)
T = beamsplitter_matrix(0.5, reflect=True)
mapped = compose_symplectic(primed, np.linalg.inv(S) @ T, S, negate=True)
dev = max(
    np.max(np.abs(mapped.X - plain.X)),
    np.max(np.abs(mapped.Y - plain.Y)),
)
print(f"after conjugation: max deviation from the plain form = {dev:.3e}")

# same conjugation with the rotation-convention beamsplitter does NOT close
T_rot = beamsplitter_matrix(0.5)
mapped_rot = compose_symplectic(primed, np.linalg.inv(S) @ T_rot, S, negate=True)
dev_rot = np.max(np.abs(mapped_rot.X - plain.X))
print(f"rotation-convention beamsplitter instead: deviation = {dev_rot:.3e}")

print()
print("where does the joint rate peak?")
joint = combined_ppt_attenuation_channel()
comp = builtin_complement("eq2_combined")
best_c, best = maximize_over_c(joint, comp, (0.0, 6.0), budget=120)
print(f"  best c in [0, 6] = {best_c:.4f}, rate {best.value:.6f} bits")
print(f"  input there uses {best.photon_number:.1f} photons per channel use")
print("the curve keeps climbing toward the edge; the rate is bought with")
print("exponentially growing photon number, so any power cap pins the useful c.")
