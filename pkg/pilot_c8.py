"""Pilot: scheme-consistency study (monolithic vs multi-pass staggered).

Fixed-grip tension of an edge-cracked square: the crack extends stably as
the top edge is pulled, and the pore fluid responds through the undrained
volumetric coupling.  Measures the inter-scheme state gap at dt and dt/4.
"""
import sys
import time

import numpy as np

from hydrofrac.material import MaterialParams
from hydrofrac.flow import PoroFluidParams
from hydrofrac.scenario import ScenarioSpec, StepSpec, BCSpec, run_scenario
from hydrofrac.output import Probe

U_END = float(sys.argv[1]) if len(sys.argv) > 1 else 2.5e-4


def make_spec(scheme, dt):
    mat = MaterialParams(E=10e9, nu=0.2, Gc=100.0, ell=0.1, model="AT2")
    pf = PoroFluidParams(
        alpha_r=0.05, n_pr=0.01, rho_fl=1000.0, mu_fl=1e-3, C_fl=1e-7,
        K_r=1e-15, K_f=1e-12, coupling="domain_decomposition", c1=0.5, c2=1.0,
    )
    bcs = [
        BCSpec(kind="displacement_y", side="bottom", v0=0.0, v1=0.0),
        BCSpec(kind="displacement_x", side="left", v0=0.0, v1=0.0),
        BCSpec(kind="displacement_y", side="top", v0=0.0, v1=U_END),
        BCSpec(kind="pressure", side="right", v0=0.0, v1=0.0),
    ]
    return ScenarioSpec(
        width=1.0, height=1.0, nx=20, ny=20, mat=mat, pf=pf,
        split="none", scheme=scheme,
        cracks=[np.array([[0.0, 0.525], [0.3, 0.525]])],
        steps=[StepSpec(duration=400.0, dt=dt, bcs=bcs)],
        probes=[Probe(name="tip", point=(0.425, 0.525), quantities=("phi", "p")),
                Probe(name="far", point=(0.725, 0.525), quantities=("phi", "p"))],
    )


def final_state(scheme, dt):
    r = run_scenario(make_spec(scheme, dt), f"pilot_out/c8_{scheme}_{dt}")
    if not r.ok:
        print(f"  !! {scheme} dt={dt}: {r.message}")
        return None, r
    s = r.state
    return np.concatenate([s.u * 1e6, s.phi, s.p / 1e5]), r


for dt in (16.0, 4.0, 1.0):
    t0 = time.time()
    xm, rm = final_state("monolithic", dt)
    xs, rs = final_state("multi_pass_staggered", dt)
    if xm is None or xs is None:
        continue
    gap = np.linalg.norm(xm - xs) / np.linalg.norm(xm)
    d = np.genfromtxt(f"pilot_out/c8_monolithic_{dt}/probes.csv", delimiter=",", names=True)
    print(f"dt={dt:4g}: gap={gap:.4e}  tip_phi={d['tip_phi'][-1]:.3f} "
          f"far_phi={d['far_phi'][-1]:.3f} tip_p={d['tip_p'][-1]:.4g}  [{time.time()-t0:.0f}s]")
