"""Mixedness of a diagonally polarized beam as its cross-coherence is removed,
before and after a fixed polarization element.

    python scripts/decoherence_scan.py
"""
import numpy as np

from lorentz_optics import lorentz, polarization as pol, sl2c

element = sl2c.compose([sl2c.phase_shift(0.7), sl2c.rotation(1.1), sl2c.attenuation(0.4)])
mueller = pol.mueller_from_sl2c(element)
start = pol.coherency_from_jones([1 / np.sqrt(2), 1 / np.sqrt(2)])

print(f"{'r':>5} {'M/S0 in':>10} {'M/S0 out':>10} {'M^2 in':>10} {'M^2 out':>10}  class")
for r in np.linspace(1, 0, 11):
    s_in = pol.stokes_from_coherency(pol.decohere(start, r))
    s_out = mueller @ s_in
    rep_in, rep_out = pol.mixedness(s_in), pol.mixedness(s_out)
    print(
        f"{r:5.2f} {rep_in.ratio:10.6f} {rep_out.ratio:10.6f} "
        f"{lorentz.minkowski_interval(s_in):10.6f} {lorentz.minkowski_interval(s_out):10.6f}  {rep_out.kind}"
    )
