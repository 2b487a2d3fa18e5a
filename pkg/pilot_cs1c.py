"""Pilot: spatial pressure structure for the coupling strategies in case 1."""
import tempfile
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import apply_overrides, run_scenario

spec = apply_overrides(load_case(1), until=100.0)


def run(s):
    with tempfile.TemporaryDirectory() as tmp:
        return run_scenario(s, tmp)


for label, coup, b in [("domain_decomposition", "domain_decomposition", 2.0),
                       ("hybrid", "hybrid", 2.0),
                       ("modified_darcy b=2", "modified_darcy", 2.0)]:
    s = replace(spec, pf=replace(spec.pf, coupling=coup, b_exp=b))
    r = run(s)
    mesh = r.model.mesh
    p = r.state.p
    x, y = mesh.nodes[:, 0], mesh.nodes[:, 1]
    # interior band away from the pinned bottom/top edges
    band = (y > 0.5) & (y < 3.5)
    far = band & (np.abs(x - 1.95) > 1.0)
    near = band & (np.abs(x - 1.95) <= 0.3)
    print(f"-- {label}  (pmax={np.abs(p).max():.3f})")
    print(f"   far band:  min={np.abs(p[far]).min():.2e} med={np.median(np.abs(p[far])):.2e} "
          f"max={np.abs(p[far]).max():.2e}")
    print(f"   near band: med={np.median(np.abs(p[near])):.2e} max={np.abs(p[near]).max():.2e}")
    # profile along mid-height y≈2.05 (node row)
    row = np.isclose(y, 2.0)
    xs = x[row]
    order = np.argsort(xs)
    prof = p[row][order]
    sel = slice(0, None, 5)
    print("   p(y=2):", " ".join(f"{v:8.2e}" for v in prof[sel]))
