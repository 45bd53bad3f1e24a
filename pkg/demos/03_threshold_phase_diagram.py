"""Entangled/disentangled phase boundary in the (Delta, T) plane.

For each anisotropy the threshold temperatures of the impurity dimer
are extracted by bisection; near the ground-state boundary a strong
field produces a re-entrant D-E-D window where heating first creates
and then destroys entanglement.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from diamondchain import ChainSpec, threshold_temperatures

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, (h, marked_delta) in zip(axes, [(2.0, 1.0), (2.2, 1.3)]):
    deltas = np.linspace(0.0, 2.0, 81)
    points = {0: ([], []), 1: ([], [])}
    for delta in deltas:
        spec = ChainSpec.from_params(Delta=float(delta), h=h, gamma=0.8, eta=-0.8)
        found = threshold_temperatures(spec, 0.01, 2.0, scan_points=600)
        for k, root in enumerate(found.roots):
            if k in points:
                points[k][0].append(delta)
                points[k][1].append(root)
    ax.plot(points[0][0], points[0][1], ".", ms=3, label="first root")
    ax.plot(points[1][0], points[1][1], ".", ms=3, label="second root")
    ax.axvline(marked_delta, ls="--", lw=0.8, color="gray")
    ax.set_xlabel("Delta")
    ax.set_title(f"h/J = {h}")
    ax.legend(fontsize=8)

    marked = threshold_temperatures(
        ChainSpec.from_params(Delta=marked_delta, h=h, gamma=0.8, eta=-0.8), 0.01, 2.0
    )
    sequence = "-".join(marked.labels)
    print(
        f"h={h}, Delta={marked_delta}: {sequence} with roots "
        f"{[round(r, 4) for r in marked.roots]}"
    )
axes[0].set_ylabel("threshold temperature T/J")
fig.tight_layout()
fig.savefig(OUT / "threshold_phase_diagram.png", dpi=150)
print(f"figure -> {OUT / 'threshold_phase_diagram.png'}")
