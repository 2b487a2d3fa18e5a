"""Pilot: case 3 default run (no-tension split, domain decomposition)."""
import sys
import time

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario

until = float(sys.argv[1]) if len(sys.argv) > 1 else 60.0
spec = apply_overrides(load_case(3), until=until)
print(f"mesh {spec.nx}x{spec.ny} base; running to t={until}")
t0 = time.time()
res = run_scenario(spec, "pilot_out/cs3")
wall = time.time() - t0
print(f"ok={res.ok} increments={res.increments} t_end={res.state.time:.4g} "
      f"msg={res.message!r}  [{wall:.1f}s, {wall/max(res.increments,1)*1000:.0f} ms/inc]")
print(f"elements: {res.model.mesh.n_elem}")

data = np.genfromtxt("pilot_out/cs3/probes.csv", delimiter=",", names=True)
t = data["time"]
cols = [c for c in data.dtype.names if c != "time"]
sel = np.linspace(0, len(t) - 1, 20).astype(int)
print("time    " + "  ".join(f"{c:>14s}" for c in cols))
for i in sel:
    print(f"{t[i]:7.2f} " + "  ".join(f"{data[c][i]:14.4e}" for c in cols))
