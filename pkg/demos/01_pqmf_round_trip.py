"""PQMF in five minutes: split a signal into sub-bands and put it back together.

The analysis bank decimates each of the B bands by B, so the multiband
representation has the same total sample count as the input. Near-perfect
reconstruction means the round trip only costs a known group delay (trimmed
automatically) and a tiny residual error, which we report as an SNR.
"""

import numpy as np

from faderwave.audio import AudioBuffer
from faderwave.pqmf import design_pqmf, pqmf_analyze, pqmf_synthesize, round_trip_snr

SR = 16000

# 1. Design the default 8-band bank. The prototype lowpass is optimized at
#    design time, so this takes a moment but happens once per configuration.
bank = design_pqmf(num_bands=8)
print(f"bank: {bank.num_bands} bands, prototype length {bank.prototype_length}")

# 2. Analyze one second of white noise.
rng = np.random.default_rng(0)
x = AudioBuffer(rng.standard_normal(SR) * 0.3, SR)
mb = pqmf_analyze(x, bank)
print(f"multiband shape: {mb.bands.shape}  (bands x decimated samples)")

# 3. Per-band energy: white noise spreads evenly across bands.
energy = np.mean(mb.bands**2, axis=1)
for k, e in enumerate(energy):
    print(f"  band {k}: relative energy {e / energy.sum():.3f}")

# 4. Resynthesize and measure the round trip.
y = pqmf_synthesize(mb, bank)
print(f"round-trip SNR: {round_trip_snr(x, bank):.1f} dB (>= 40 expected)")

# 5. A low sine lands almost entirely in band 0.
t = np.arange(SR) / SR
low = AudioBuffer(0.5 * np.sin(2 * np.pi * 100.0 * t), SR)
mb_low = pqmf_analyze(low, bank)
per_band = np.sum(mb_low.bands**2, axis=1)
print(f"100 Hz sine: {per_band[0] / per_band.sum():.1%} of energy in band 0")
