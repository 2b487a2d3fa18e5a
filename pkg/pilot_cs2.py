"""Pilot: case 2 stress/strain paths at the fault probes."""
import sys
import time

import numpy as np

from hydrofrac.cases import load_case
from hydrofrac.scenario import run_scenario

spec = load_case(2)
if "--skip-run" not in sys.argv:
    t0 = time.time()
    res = run_scenario(spec, "pilot_out/cs2")
    print(f"ok={res.ok} increments={res.increments} t_end={res.state.time:.4g} "
          f"msg={res.message!r}  [{time.time()-t0:.1f}s]")

data = np.genfromtxt("pilot_out/cs2/probes.csv", delimiter=",", names=True)
mat = spec.mat
B = mat.B
t = data["time"]


def analyze(tag):
    i1e, sj2e = data[f"{tag}_i1_eff"], data[f"{tag}_sqrtj2_eff"]
    i1t, sj2t = data[f"{tag}_i1_sigma"], data[f"{tag}_sqrtj2_sigma"]
    i1s, sj2s = data[f"{tag}_i1_eps"], data[f"{tag}_sqrtj2_eps"]
    p = data[f"{tag}_p"]
    q_eps = i1s + 6.0 * B * sj2s
    fracture = q_eps >= 0.0
    elastic = (~fracture) & (2.0 * mat.mu * sj2s <= 3.0 * B * mat.K * i1s)
    frictional = ~fracture & ~elastic
    crit = np.abs(sj2e - B * i1e) / np.maximum(np.abs(B * i1e), 1e-30)
    ratio = sj2t / np.maximum(np.abs(i1t), 1e-30)

    # on-line check over frictional samples with meaningful load and
    # moderate strain (excludes the post-snap boundary-riding state)
    fr = frictional & (np.abs(i1e) > 1e-2 * np.abs(i1e).max()) & (sj2s < 1e-2)
    print(f"[{tag}] frictional on-line samples: {fr.sum()}, max dev "
          f"{crit[fr].max() if fr.any() else float('nan'):.3e}")

    # first sign change of q_eps at real load
    idx = np.where((q_eps[:-1] < 0.0) & (q_eps[1:] >= 0.0) & (p[1:] > 1e6))[0]
    if idx.size == 0:
        print(f"[{tag}] no boundary crossing found")
        return
    i = int(idx[0]) + 1
    print(f"[{tag}] crossing at t={t[i]:.6g} p={p[i]:.6g} "
          f"q_eps {q_eps[i-1]:+.2e} -> {q_eps[i]:+.2e}")
    for k in range(max(0, i - 3), min(len(t), i + 4)):
        print(f"    t={t[k]:.6g} p={p[k]:.5g} q={q_eps[k]:+.3e} "
              f"I1_eps={i1s[k]:+.3e} I1_eff={i1e[k]:+.3e} sj2_eff={sj2e[k]:.3e} "
              f"ratio={ratio[k]:.3e}")


analyze("fault")
analyze("fault_b")
