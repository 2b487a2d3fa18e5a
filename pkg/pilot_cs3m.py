"""Pilot: crack-interaction case matrix -- split x coupling overrides.

Usage: python3 pilot_cs3m.py NAME SPLIT COUPLING [UNTIL]
"""
import sys
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import run_scenario

name, split, coupling = sys.argv[1:4]
until = float(sys.argv[4]) if len(sys.argv) > 4 else 150.0

spec = load_case(3)
spec = replace(spec, split=split, pf=replace(spec.pf, coupling=coupling),
               steps=[replace(spec.steps[0], duration=until)])
r = run_scenario(spec, f"pilot_out/m3_{name}")
print(f"ok={r.ok} msg='{r.message}'")

d = np.genfromtxt(f"pilot_out/m3_{name}/probes.csv", delimiter=",", names=True)
t = d["time"]; p = d["crack_mid_p"]
i = int(np.argmax(p))
print(f"peak p={p[i]:.4e} at t={t[i]:.4g}  (n={len(t)}, t_end={t[-1]:.4g})")
print(f"end: p={p[-1]:.4e} tip_r1={d['tip_r1_phi'][-1]:.3f} "
      f"tip_r2={d['tip_r2_phi'][-1]:.3f} tip_r3={d['tip_r3_phi'][-1]:.3f} "
      f"tip_l={d['tip_l_phi'][-1]:.3f} vert_mid_p={d['vert_mid_p'][-1]:.4e} "
      f"vert_top={d['vert_top_phi'][-1]:.3f}")
