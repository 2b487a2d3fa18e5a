"""Pilot: case-3 p_c sensitivity with geometry rebuilt per resolution.

Usage: pilot_cs3c.py RES ELLFAC XL XR UNTIL DT
  RES    base-mesh multiplier (fine h = 0.1/(4*RES))
  ELLFAC ell = ELLFAC * fine h
  XL,XR  horizontal crack extent
"""
import sys
import time
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario

res = float(sys.argv[1])
ellfac = float(sys.argv[2])
xl, xr = float(sys.argv[3]), float(sys.argv[4])
until = float(sys.argv[5])
dt = float(sys.argv[6])

spec = load_case(3, resolution=res)
h = spec.width / spec.nx / spec.refine[4]
yc = 1.0 + h / 2.0          # horizontal crack: row just above y=1
xv = 1.2 + h / 2.0          # vertical crack: column just right of x=1.2
spec = replace(spec, mat=replace(spec.mat, ell=ellfac * h))
spec.cracks[0] = np.array([[xl, yc], [xr, yc]])
spec.cracks[1] = np.array([[xv, 0.7], [xv, 1.3]])
for bc in spec.steps[0].bcs:
    if bc.kind == "source":
        bc.box = (xl, 1.0, xr, 1.0 + h)
spec = apply_overrides(spec, dt=dt, until=until)
print(f"res={res} h={h:.4g} ell={spec.mat.ell:.4g} crack=[{xl},{xr}]@y={yc:.4g} "
      f"dt={dt} until={until}")

t0 = time.time()
tag = f"r{res}_e{ellfac}_a{xr - xl:.2f}"
r = run_scenario(spec, f"pilot_out/cs3_{tag}")
wall = time.time() - t0
print(f"ok={r.ok} inc={r.increments} n_elem={r.model.mesh.n_elem} msg={r.message!r} "
      f"[{wall:.0f}s, {wall/max(r.increments,1)*1000:.0f} ms/inc]")

d = np.genfromtxt(f"pilot_out/cs3_{tag}/probes.csv", delimiter=",", names=True)
p = d["crack_mid_p"]
ipk = int(np.argmax(p))
print(f"peak p = {p[ipk]:.4g} at t={d['time'][ipk]:.4g} (sample {ipk}/{len(p)-1})")
print(f"end   p = {p[-1]:.4g}; tip_r2 phi end = {d['tip_r2_phi'][-1]:.3f}; "
      f"vert_mid p end = {d['vert_mid_p'][-1]:.4g}")
