#!/usr/bin/env python
# Fragility curves of the four pole age groups used in the 33-bus case study.
#
# Each group keeps its baseline failure probability p0 until the wind reaches
# v_th, then climbs linearly to certain failure at v_max. Older poles start
# higher and saturate earlier.

import numpy as np

from hilprank import fragility_curve, load_bundled, slope

ds = load_bundled()
speeds = np.arange(0, 131, 10.0)

print("v (m/s)  " + "  ".join(f"R{c.id:<5}" for c in ds.class_table))
for v, row in zip(speeds, np.array([fragility_curve(c, speeds) for c in ds.class_table]).T):
    print(f"{v:7.0f}  " + "  ".join(f"{q:.4f}" for q in row))

for c in ds.class_table:
    print(f"R{c.id}: {c.lifetime_years[0]:g}-{c.lifetime_years[1]:g} years, "
          f"slope {slope(c):.5f} per m/s between {c.v_th:g} and {c.v_max:g} m/s")

# plot if matplotlib is around
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    fine = np.linspace(0, 130, 521)
    for c in ds.class_table:
        plt.plot(fine, fragility_curve(c, fine), label=f"R{c.id} ({c.lifetime_years[0]:g}-{c.lifetime_years[1]:g} y)")
    plt.xlabel("wind speed (m/s)")
    plt.ylabel("failure probability")
    plt.legend()
    plt.savefig("fragility_curves.png", dpi=120)
    print("wrote fragility_curves.png")
