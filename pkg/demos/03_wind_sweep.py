#!/usr/bin/env python
# How the number of damaged poles grows with wind speed, per feeder.
#
# Below the lowest threshold speed only the baseline probability p0 acts, so
# the counts are flat. Above the highest v_max every pole is down.

from hilprank import load_bundled, wind_sweep

ds = load_bundled()
table = wind_sweep(ds, 0, 130, 5)

print(f"{'v':>5} {'F1':>5} {'F2':>5} {'F3':>5} {'all':>5}   (class totals)   lines")
for row in table.rows:
    r = dict(zip(table.columns, row))
    print(f"{r['v']:5.0f} {r['F1:total']:5d} {r['F2:total']:5d} {r['F3:total']:5d} {r['total']:5d}"
          f"                    {r['lines']:5d}")

table.to_csv("wind_sweep.csv")
print("wrote wind_sweep.csv")
