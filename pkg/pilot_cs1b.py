"""Pilot: case 1 zero-flux locality and coupling-method pressure spread."""
import tempfile
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.output import gauss_point_fields
from hydrofrac.scenario import apply_overrides, run_scenario
from hydrofrac.assembly import nodal_to_gp

spec = apply_overrides(load_case(1), until=100.0)


def run(s):
    with tempfile.TemporaryDirectory() as tmp:
        return run_scenario(s, tmp)


# --- 4a: DD with K_r = 0 -> flux exactly zero wherever phi < c1 -------------
res = run(spec)
model, state = res.model, res.state
mesh = model.mesh
gpf = gauss_point_fields(model, state)
phi_gp = np.clip(nodal_to_gp(mesh, state.phi), 0.0, 1.0).ravel()
q = np.hypot(gpf["qx"], gpf["qy"])
below = phi_gp < spec.pf.c1
print(f"DD: {below.sum()} GPs with phi<c1; max |q| there = {q[below].max():.3e}")
print(f"    max |q| overall = {q.max():.3e}")

# --- 4c: pressure spread for the three coupling strategies ------------------
for label, coup, b in [("domain_decomposition", "domain_decomposition", 2.0),
                       ("hybrid", "hybrid", 2.0),
                       ("modified_darcy b=0", "modified_darcy", 0.0),
                       ("modified_darcy b=2", "modified_darcy", 2.0)]:
    s = replace(spec, pf=replace(spec.pf, coupling=coup, b_exp=b))
    r = run(s)
    p = r.state.p
    pmax = np.abs(p).max()
    far = np.where((np.abs(mesh.nodes[:, 0] - 1.95) > 1.0))[0]  # > 1 m from crack
    frac = np.mean(np.abs(p) > 1e-3 * pmax)
    print(f"{label:24s} ok={r.ok} pmax={pmax:.3e}  min|p| far={np.abs(p[far]).min():.3e}  "
          f"frac |p|>1e-3 pmax: {frac:.3f}")
