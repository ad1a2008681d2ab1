"""The two sensor-spoofing scenarios, run open-loop with no operator.

Scenario 1 feeds the level loop a constant low tank level: believing the
tank near-empty, the automation shuts the water outlet while the tank
keeps filling; the pressure loop quietly compensates, so the only honest
witnesses are the rising true level and the collapsed water output.

Scenario 2 feeds the pressure loop a constant low tank pressure: the
vent closes, the true pressure climbs, the backpressure chokes the inlet
line, and the ejector loses its air draw.
"""

import dataclasses

from resbench import plant
from resbench.attacks import AttackSession
from resbench.channels import ChannelId
from resbench.config import load_config, load_scenario
from resbench.control import automation_step

config = load_config()


def run_headless(name: str, horizon: int):
    scenario = load_scenario(name, config)
    state, ctrl = plant.settle(config.params, config.setpoints, config.gains)
    state = dataclasses.replace(state, t=scenario.t1)
    session = AttackSession(scenario)
    rows = []
    for _ in range(horizon):
        readings = state.readings(config.params)
        rows.append(readings)
        reported = session.report(readings, state.t)
        commands, ctrl = automation_step(
            reported, config.setpoints, ctrl, config.gains, 1.0
        )
        state = plant.advance(state, commands, config.params, 10)
    return scenario, rows


scenario, rows = run_headless("scenario1", 300)
print(f"--- {scenario.scenario_id}: {scenario.note}")
print(f"spoofed {scenario.channel.value} reads {scenario.value} forever")
for t in (0, 60, 120, 240, 299):
    r = rows[t]
    print(f"  t1+{t:>3}s: AV2={r[ChannelId.AV2]:.3f}  true S6={r[ChannelId.S6]:.3f} m  "
          f"S5={r[ChannelId.S5]:.0f} Pa  QOUT={r[ChannelId.QOUT]:.2e}")
print(f"  water output lost: {100 * (1 - rows[-1][ChannelId.QOUT] / rows[0][ChannelId.QOUT]):.0f}%")
print()

scenario, rows = run_headless("scenario2", 500)
print(f"--- {scenario.scenario_id}: {scenario.note}")
for t in (0, 100, 200, 350, 499):
    r = rows[t]
    print(f"  t1+{t:>3}s: AV3={r[ChannelId.AV3]:.3f}  true S5={r[ChannelId.S5]:.0f} Pa  "
          f"S7={r[ChannelId.S7]:.2e}  S2={r[ChannelId.S2]:.2e}")
peak = max(r[ChannelId.S5] for r in rows)
print(f"  true pressure peaked {100 * (peak / config.setpoints.tank_pressure - 1):.0f}% "
      f"above its setpoint; air draw fell "
      f"{100 * (1 - min(r[ChannelId.S7] for r in rows) / rows[0][ChannelId.S7]):.0f}%")
