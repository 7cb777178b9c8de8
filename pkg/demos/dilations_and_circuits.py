"""Dilations, complementary channels, and the optical gate set."""

import numpy as np

from cvchannels import (
    Beamsplitter,
    OpticalCircuit,
    Squeezer,
    attenuation_channel,
    boundary_ppt_channel,
    boundary_ppt_extension,
    channel_from_circuit,
    channel_of,
    compile_circuit,
    complement,
    dilation_from_circuit,
    is_symplectic,
    verify_extension,
)

np.set_printoptions(precision=6, suppress=True)

# the closed-form extension of the boundary channel: S = [[X, Z], [Z, X]]
d = boundary_ppt_extension()
ch = boundary_ppt_channel()
print("extension is symplectic:", is_symplectic(d.S, 1e-10))
print("extension induces the channel:", verify_extension(ch, d.S, (2, 2, 2, 2)))

comp = complement(d)
print("complement X (the coupling block Z):")
print(comp.X)
print("Z Z^t = sqrt2 I check:", np.abs(comp.X @ comp.X.T - np.sqrt(2) * np.eye(4)).max())

print()
print("== channels from circuits ==")
# a lone beamsplitter with a vacuum ancilla IS the attenuation channel
circ = OpticalCircuit(2, (Beamsplitter(0.5, (0, 1)),))
bs_ch, bs_comp = channel_from_circuit(circ, [0], [1], [0], [1])
want = attenuation_channel(0.5)
print("beamsplitter -> attenuation(0.5):", np.abs(bs_ch.X - want.X).max() < 1e-12)
print("its complement is the reflected arm, X_E =")
print(bs_comp.X)

# gate order matters: squeezing after mixing is not mixing after squeezing
a = compile_circuit(OpticalCircuit(2, (Squeezer(2.0, 0), Beamsplitter(0.5, (0, 1)))))
b = compile_circuit(OpticalCircuit(2, (Beamsplitter(0.5, (0, 1)), Squeezer(2.0, 0))))
print("circuit order changes the symplectic:", np.abs(a - b).max() > 0.1)
print("both are symplectic:", is_symplectic(a) and is_symplectic(b))
print()
print("channel induced by squeeze-then-mix on one input mode:")
sq_dil = dilation_from_circuit(
    OpticalCircuit(2, (Squeezer(2.0, 0), Beamsplitter(0.5, (0, 1)))), [0], [1], [0], [1]
)
sq_ch = channel_of(sq_dil)
print("X =", sq_ch.X.tolist(), " Y =", sq_ch.Y.tolist())
