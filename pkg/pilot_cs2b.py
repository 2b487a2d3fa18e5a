"""Inspect raw probe invariants near the case-2 lift-off crossing."""
import numpy as np

from hydrofrac.cases import load_case

spec = load_case(2)
mat = spec.mat
B = mat.B

data = np.genfromtxt("pilot_out/cs2/probes.csv", delimiter=",", names=True)
t = data["time"]
i1e, sj2e = data["fault_i1_eff"], data["fault_sqrtj2_eff"]
i1t, sj2t = data["fault_i1_sigma"], data["fault_sqrtj2_sigma"]
i1s, sj2s = data["fault_i1_eps"], data["fault_sqrtj2_eps"]
p = data["fault_p"]
q_eps = i1s + 6.0 * B * sj2s

i_cross = int(np.argmin(np.abs(q_eps) + 1e9 * (p < 1.0e6)))
print("   t         p          I1_eps     sqJ2_eps   q_eps      I1_eff     sqJ2_eff   I1_tot     sqJ2_tot")
for i in range(i_cross - 3, i_cross + 4):
    print(f"{t[i]:.5g}  {p[i]:.4e}  {i1s[i]:+.3e} {sj2s[i]:.3e} {q_eps[i]:+.2e} "
          f"{i1e[i]:+.3e} {sj2e[i]:.3e} {i1t[i]:+.3e} {sj2t[i]:.3e}")

# worst "frictional" on-line deviation sample
fracture = q_eps >= 0.0
elastic = (~fracture) & (2.0 * mat.mu * sj2s <= 3.0 * B * mat.K * i1s)
frictional = ~fracture & ~elastic
loaded = np.abs(i1e) > 1e3
crit = np.abs(sj2e - B * i1e) / np.maximum(np.abs(B * i1e), 1e-30)
fr = frictional & loaded
j = int(np.argmax(np.where(fr, crit, -1.0)))
print(f"\nworst frictional sample at t={t[j]:.5g} p={p[j]:.4e}:")
print(f"  I1_eps={i1s[j]:+.3e} sqJ2_eps={sj2s[j]:.3e} q={q_eps[j]:+.3e}")
print(f"  I1_eff={i1e[j]:+.3e} sqJ2_eff={sj2e[j]:.3e}  dev={crit[j]:.3e}")
print(f"  A*q*6={6*mat.K*mat.mu/(18*B**2*mat.K+2*mat.mu)*q_eps[j]:+.3e}")
# deviation profile percentiles over frictional&loaded
print("\ndeviation percentiles (frictional & loaded):")
for q_ in (50, 90, 99, 100):
    print(f"  p{q_}: {np.percentile(crit[fr], q_):.3e}")
# where do large deviations live?
bad = fr & (crit > 0.02)
print(f"samples with dev>2%: {bad.sum()} of {fr.sum()}  (t range "
      f"{t[bad].min() if bad.any() else float('nan'):.4g}"
      f"..{t[bad].max() if bad.any() else float('nan'):.4g})")
print(f"|I1_eff| range among bad: "
      f"{np.abs(i1e[bad]).min() if bad.any() else float('nan'):.3e}"
      f"..{np.abs(i1e[bad]).max() if bad.any() else float('nan'):.3e}"
      f"  (max overall {np.abs(i1e).max():.3e})")
