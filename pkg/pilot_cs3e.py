"""Pilot: near-critical tip state of case 3 (history field vs AT2 threshold)."""
import time

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario
from hydrofrac.assembly import nodal_to_gp, grad_at_gp, strain_at_gp
from hydrofrac.material import split_fields

spec = load_case(3)
spec = apply_overrides(spec, until=25.75)
t0 = time.time()
r = run_scenario(spec, "pilot_out/cs3_tip")
print(f"ok={r.ok} inc={r.increments} t={r.state.time} [{time.time()-t0:.0f}s]")

mesh, model, st = r.model.mesh, r.model, r.state
tab = model.tables
phi_gp = nodal_to_gp(tab, st.phi)
p_gp = nodal_to_gp(tab, st.p)
eps = strain_at_gp(tab, st.u)
sf = split_fields(eps, phi_gp, model.split, model.mat)

gx = mesh.gp_xy[:, 0]
gy = mesh.gp_xy[:, 1]
yc = 1.0125
mat = model.mat
thr = mat.Gc / (2.0 * mat.ell)
print(f"Gc/(2*ell) = {thr:.4e}")

d = np.genfromtxt("pilot_out/cs3_tip/probes.csv", delimiter=",", names=True)
print(f"crack p at end: {d['crack_mid_p'][-1]:.5g}")

# walk the row of Gauss points just above the crack line, x in [0.85, 1.15]
band = (np.abs(gy - yc) < 0.008) & (gx > 0.84) & (gx < 1.17)
idx = np.nonzero(band)[0]
order = np.argsort(gx[idx])
idx = idx[order]
print("    x      phi      H          psi_d      p          phi_eq(H)")
for i in idx:
    H = max(st.H[i], sf.psi_d[i])
    phieq = H / (H + thr)
    print(f" {gx[i]:7.4f}  {phi_gp[i]:6.4f}  {st.H[i]:.3e}  {sf.psi_d[i]:.3e}  "
          f"{p_gp[i]:.3e}  {phieq:6.4f}")
