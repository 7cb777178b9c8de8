"""Walk through the state layer: covariance matrices, symplectic spectra,
entropy, normal forms, and purification."""

import numpy as np

from cvchannels import (
    entropy,
    purify,
    reduce_to_modes,
    symplectic_eigenvalues,
    thermal_state,
    vacuum_state,
    williamson,
)
from cvchannels.capacity import input_family

np.set_printoptions(precision=6, suppress=True)

print("== vacuum and thermal states ==")
vac = vacuum_state(2)
th = thermal_state(3.0)  # 3 photons, gamma = 7 I
print("vacuum spectrum:", symplectic_eigenvalues(vac))
print("thermal spectrum:", symplectic_eigenvalues(th))
print("thermal entropy_bits:", entropy(symplectic_eigenvalues(th)))

print()
print("== Williamson normal form of a correlated state ==")
st = input_family(1.5)
lam = symplectic_eigenvalues(st)
print("symplectic spectrum:", lam)
# one big eigenvalue carries all the mixedness, the other two modes are pure
S, lam2 = williamson(st)
D = S @ st.gamma @ S.T
print("diagonalized (should be diag):")
print(np.round(D, 6))
print("round-trip error:", np.abs(np.linalg.inv(S) @ D @ np.linalg.inv(S).T - st.gamma).max())

print()
print("== purification doubles the modes and kills the entropy ==")
p = purify(st)
print("purified mode count:", p.modes)
print("purified spectrum:", symplectic_eigenvalues(p))
back = reduce_to_modes(p, [0, 1, 2])
print("reduction recovers the input:", np.array_equal(back.gamma, st.gamma))
print("entropy before/after purification: %.6f / %.6f bits"
      % (entropy(lam), entropy(symplectic_eigenvalues(p))))
