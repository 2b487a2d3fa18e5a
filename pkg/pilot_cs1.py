"""Pilot: case 1 flux through the top row for the three (c1, c2) sets."""
import tempfile
import time
from dataclasses import replace

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.output import gauss_point_fields
from hydrofrac.scenario import apply_overrides, run_scenario

spec = apply_overrides(load_case(1), until=100.0)


def total_Q(res):
    model, state = res.model, res.state
    mesh = model.mesh
    gpf = gauss_point_fields(model, state)
    qy = gpf["qy"].reshape(mesh.n_elem, 4)
    elems = mesh.elements_in_box(0.0, 3.9, 4.0, 4.0)
    w = mesh.tables.wdetJ[elems]
    return float((w * qy[elems]).sum()) / 0.1


results = {}
for name, (c1, c2) in [("S1", (0.5, 0.8)), ("S2", (0.5, 1.0)), ("S3", (0.8, 1.0))]:
    s = replace(spec, pf=replace(spec.pf, c1=c1, c2=c2))
    t0 = time.time()
    with tempfile.TemporaryDirectory() as tmp:
        res = run_scenario(s, tmp)
        Q = total_Q(res)
    results[name] = Q
    print(f"{name} (c1={c1}, c2={c2}): ok={res.ok} inc={res.increments} "
          f"Q={Q/1000:.1f} t/s  [{time.time()-t0:.1f}s]")

q1, q2, q3 = results["S1"], results["S2"], results["S3"]
print(f"\nordering Q1>Q2>Q3: {q1 > q2 > q3}")
print(f"ratios: Q2/Q1={q2/q1:.3f} (paper 450/550={450/550:.3f}, dev {abs(q2/q1-450/550)/(450/550)*100:.1f}%)")
print(f"        Q3/Q1={q3/q1:.3f} (paper 225/550={225/550:.3f}, dev {abs(q3/q1-225/550)/(225/550)*100:.1f}%)")
