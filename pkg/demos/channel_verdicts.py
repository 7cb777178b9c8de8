"""Physicality and PPT verdicts for Gaussian channels.

A channel (X, Y) is physical iff Y + i(J - XJX^t) >= 0 and entanglement
binding (PPT, zero quantum capacity) iff Y + i(J + XJX^t) >= 0. The boundary
channel passes both with two exact zero eigenvalues, which is what makes it
interesting: it is as close to useful as a PPT channel gets.
"""

import numpy as np

from cvchannels import (
    attenuation_channel,
    boundary_ppt_channel,
    combined_ppt_attenuation_channel,
    physicality_spectrum,
    ppt_check,
    ppt_spectrum,
    validate_channel,
)

np.set_printoptions(precision=8, suppress=True)

ch = boundary_ppt_channel()
print("boundary channel X:")
print(ch.X)
print("physicality spectrum:", physicality_spectrum(ch))
print("ppt spectrum:        ", ppt_spectrum(ch))
print("valid:", validate_channel(ch), " ppt:", ppt_check(ch).is_ppt)

print()
print("attenuation family: valid everywhere, PPT only at total loss")
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    v = ppt_check(attenuation_channel(t))
    print(f"  t = {t:4.2f}  min ppt eigenvalue = {v.min_eigenvalue:+.4f}  ppt = {v.is_ppt}")

print()
comb = combined_ppt_attenuation_channel()
print("combined channel (PPT block + 50% attenuation):")
print("  valid:", validate_channel(comb))
print("  ppt:  ", ppt_check(comb).is_ppt, " (the attenuation arm spoils it)")
