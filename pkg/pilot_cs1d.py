"""Debug: hybrid permeability inside the fully cracked column of case 1."""
import tempfile
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario
from hydrofrac.assembly import nodal_to_gp, grad_at_gp, strain_at_gp
from hydrofrac.flow import permeability_fields, crack_opening, crack_normals

spec = apply_overrides(load_case(1), until=100.0)
s = replace(spec, pf=replace(spec.pf, coupling="hybrid", b_exp=2.0))
with tempfile.TemporaryDirectory() as tmp:
    r = run_scenario(s, tmp)

mesh = r.model.mesh
state = r.state
phi_gp = np.clip(nodal_to_gp(mesh, state.phi), 0.0, 1.0).ravel()
grad_phi = grad_at_gp(mesh, state.phi).reshape(-1, 2)
eps_gp = strain_at_gp(mesh, state.u).reshape(-1, 3)

K = permeability_fields(mesh, phi_gp, grad_phi, eps_gp, s.pf)
n = crack_normals(mesh, phi_gp, grad_phi)
w = crack_opening(mesh, n, eps_gp)

gp_xy = np.repeat(mesh.nodes[mesh.elements].mean(axis=1), 4, axis=0)  # element centers, 4x
crack = (np.abs(gp_xy[:, 0] - 1.95) < 0.05) & (phi_gp > 0.99)
idx = np.where(crack)[0][:8]
print("gp  phi      n            w        Kxx       Kyy       Kxy")
for i in idx:
    print(f"{i}  {phi_gp[i]:.3f}  ({n[i,0]:+.2f},{n[i,1]:+.2f})  {w[i]:.3e}  "
          f"{K[i,0]:.3e}  {K[i,1]:.3e}  {K[i,2]:.3e}")
print("crack GPs:", crack.sum(), " mean Kyy:", K[crack, 1].mean(),
      " mean Kxx:", K[crack, 0].mean())
print("gradphi norms at crack gps:", np.linalg.norm(grad_phi[idx], axis=1))
