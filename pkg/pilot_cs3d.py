"""Pilot: crack opening profile vs the plane-strain pressurised-crack solution."""
import time
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario

spec = load_case(3)
spec = apply_overrides(spec, until=20.0)
t0 = time.time()
r = run_scenario(spec, "pilot_out/cs3_open")
print(f"ok={r.ok} inc={r.increments} [{time.time()-t0:.0f}s]")

mesh = r.model.mesh
u = r.state.u.reshape(-1, 2)
p = r.state.p
phi = r.state.phi
X, Y = mesh.nodes[:, 0], mesh.nodes[:, 1]

d = np.genfromtxt("pilot_out/cs3_open/probes.csv", delimiter=",", names=True)
p_cr = d["crack_mid_p"][-1]
print(f"crack pressure p = {p_cr:.5g}")

Ep = r.model.mat.E / (1.0 - r.model.mat.nu**2)
a = 0.15

def row(y0, xs):
    out = []
    for x in xs:
        m = (np.abs(X - x) < 1e-9) & (np.abs(Y - y0) < 1e-9)
        out.append(u[m, 1][0] if m.any() else np.nan)
    return np.array(out)

xs = np.arange(0.6, 0.9 + 1e-9, 0.025)
# jump across the cracked row alone, and across the whole damaged band
w_row = row(1.025, xs) - row(1.000, xs)
w_band = row(1.125, xs) - row(0.900, xs)
xc = 0.5 * (0.6 + 0.9)
w_lefm = 4.0 * p_cr / Ep * np.sqrt(np.maximum(a**2 - (xs - xc) ** 2, 0.0))
print("   x     w_row        w_band       w_lefm      band/lefm")
for i, x in enumerate(xs):
    rat = w_band[i] / w_lefm[i] if w_lefm[i] > 0 else np.nan
    print(f"{x:5.3f}  {w_row[i]:.4e}  {w_band[i]:.4e}  {w_lefm[i]:.4e}  {rat:8.3f}")

# pressure and phase field through the band at the crack midpoint
print("\n p and phi vs y at x=0.75:")
ys = np.arange(0.80, 1.23, 0.025)
for y0 in ys:
    m = (np.abs(X - 0.75) < 1e-9) & (np.abs(Y - y0) < 1e-9)
    if m.any():
        print(f"  y={y0:6.3f}  p={p[m][0]:.4e}  phi={phi[m][0]:.4f}")
