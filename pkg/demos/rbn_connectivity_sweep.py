"""Regimes of random Boolean networks across connectivity.

Sweeps the mean in-degree K and prints the network-level measures at the bit
scale.  Low K gives ordered dynamics (high S and H), high K gives chaotic
dynamics (high E, H near one half), and complexity peaks at the critical zone
in between, around 2 < K < 3.
"""

from infodyn import rbn_sweep

K_GRID = tuple(round(1.0 + 0.4 * i, 1) for i in range(11))  # 1.0 .. 5.0

print("running 40 networks per K (N=100, window 512) ...")
results = rbn_sweep(
    n=100,
    k_grid=K_GRID,
    instances=40,
    transient=512,
    window=512,
    scales=(1,),
    master_seed=11,
)

print(f"\n{'K':>4}  {'E':>7}  {'S':>7}  {'C':>7}  {'H':>7}")
curve = []
for result in results:
    m = result.aggregate["mean"]
    curve.append((result.parameter, m["C"]))
    print(f"{result.parameter:4.1f}  {m['E']:7.4f}  {m['S']:7.4f}  {m['C']:7.4f}  {m['H']:7.4f}")

peak_k, peak_c = max(curve, key=lambda kv: kv[1])
print(f"\ncomplexity peaks at K={peak_k:g} (C={peak_c:.3f}): the critical balance")
print("of ordered robustness and chaotic variability.")
