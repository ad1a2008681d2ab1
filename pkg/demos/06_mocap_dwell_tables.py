"""From pelvis positions to operator durations.

A motion-capture stream reduces to the pelvis sensor at 90 Hz.  Control
volumes (axis-aligned boxes around plant components) contextualise the
positions: each maximal run of in-volume frames becomes one dwell row,
and the summed persistence of a phase-tagged table is the operator's
activity duration.  Pools of such tables can drive campaigns in place of
personas.
"""

import io
from pathlib import Path

import numpy as np

from resbench.operators import (
    ControlVolume,
    SessionPool,
    activity_duration,
    contextualize,
    dwell_table_to_csv,
    ingest_trajectory,
)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

volumes = [
    ControlVolume("console", origin=(0.0, 0.0, 0.0), extents=(1.2, 1.2, 2.1)),
    ControlVolume("separator", origin=(4.0, 0.0, 0.0), extents=(1.5, 1.5, 2.1)),
    ControlVolume("pump-skid", origin=(8.0, 2.0, 0.0), extents=(2.0, 1.5, 2.1)),
]

# synthesise a plausible walk: console, over to the separator, back
rng = np.random.default_rng(3)
rate = 90.0
waypoints = [
    ((0.6, 0.6), 18.0),   # watching the trends at the console
    ((2.5, 0.8), 4.0),    # walking (outside every volume)
    ((4.7, 0.7), 25.0),   # inspecting the separator
    ((0.6, 0.6), 9.0),    # back at the console
]
rows = []
t = 0.0
for (x, y), dwell in waypoints:
    for _ in range(int(dwell * rate)):
        jitter = rng.normal(scale=0.05, size=2)
        rows.append(f"{t:.6f},{x + jitter[0]:.4f},{y + jitter[1]:.4f},1.05")
        t += 1.0 / rate

traj = ingest_trajectory(io.StringIO("t,x,y,z\n" + "\n".join(rows) + "\n"))
print(f"trajectory: {len(traj)} frames at {traj.rate:.0f} Hz")

table = contextualize(traj, volumes)
table.phase = "detection"
print("dwell table:")
for row in table.rows:
    print(f"  {row.volume_id:<10} entry {row.entry_t:6.2f}s  "
          f"persistence {row.persistence:6.2f}s")
duration = activity_duration(table)
print(f"detection activity duration: {duration:.2f}s")
dwell_table_to_csv(table, out / "dwell_detection.csv")

pool = SessionPool([duration, duration * 1.3], [28.5, 31.0])
times = pool.draw(np.random.default_rng(1))
print(f"a campaign draw from the dwell pool: detection {times.detection:.1f}s, "
      f"restoration {times.restoration:.1f}s")
