"""Pilot: case-3 p_c vs resolution (ell kept at 2x fine element size)."""
import sys
import time
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario

res = float(sys.argv[1]) if len(sys.argv) > 1 else 1.0
until = float(sys.argv[2]) if len(sys.argv) > 2 else 45.0
dt = float(sys.argv[3]) if len(sys.argv) > 3 else 0.25

spec = load_case(3, resolution=res)
h_min = spec.width / spec.nx / spec.refine[4]
spec = replace(spec, mat=replace(spec.mat, ell=2.0 * h_min))
spec = apply_overrides(spec, dt=dt, until=until)
print(f"res={res} h_min={h_min:.4g} ell={spec.mat.ell:.4g} dt={dt} until={until}")

t0 = time.time()
r = run_scenario(spec, f"pilot_out/cs3_r{res}")
wall = time.time() - t0
print(f"ok={r.ok} inc={r.increments} t_end={r.state.time:.4g} n_elem={r.model.mesh.n_elem} "
      f"[{wall:.0f}s, {wall/max(r.increments,1)*1000:.0f} ms/inc]")

d = np.genfromtxt(f"pilot_out/cs3_r{res}/probes.csv", delimiter=",", names=True)
p = d["crack_mid_p"]
ipk = int(np.argmax(p))
print(f"peak p = {p[ipk]:.4g} at t={d['time'][ipk]:.4g} (inc {ipk}/{len(p)-1})")
print(f"end   p = {p[-1]:.4g}; tip_r2 phi end = {d['tip_r2_phi'][-1]:.3f}; "
      f"vert_mid p end = {d['vert_mid_p'][-1]:.4g}")
