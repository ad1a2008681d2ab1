"""Tour of the plant twin: equilibrium, step response, shutdown, restart.

The model is a pump pushing water through an ejector into a vertical
separator: AV1 throttles the inlet (regulating the ejector feed pressure
S1), AV2 drains the tank (level S6), AV3 vents the headspace (pressure
S5), and the motive water drags air in through the ejector (S7).
"""

from pathlib import Path

from resbench import plant
from resbench.channels import CHANNELS, ChannelId
from resbench.config import load_config

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

config = load_config()
print("plant parameters:", config.params)
print()

# 1. closed-loop equilibrium at the default setpoints
state = plant.steady_state(config.params, config.setpoints, config.gains)
readings = state.readings(config.params)
print("steady state:")
for cid in CHANNELS:
    print(f"  {cid.value:>5}: {readings[cid]:.6g}")
print()

# 2. a manual step: open the drain wide and watch the level fall
stepped = state
for _ in range(60):
    stepped = plant.advance(stepped, (state.u1, 1.0, state.u3), config.params, 10)
print(f"after 60 s with AV2 wide open: level {stepped.level:.3f} m "
      f"(was {state.level:.3f}), pressure {stepped.p_tank:.0f} Pa")
print()

# 3. emergency shutdown from the disturbed state: close the inlet, open
# both outlets, drain and vent to the plant-off point
trace = plant.shutdown_trajectory(state, config.params)
print(f"shutdown from steady state: {len(trace)} s to drain and equalise")
trace.to_csv(out / "shutdown.csv")

# 4. automated start-up from empty back to the setpoints
trace = plant.startup_trajectory(config.params, config.setpoints, config.gains)
final = trace.row(len(trace) - 1)
print(f"start-up from empty: {len(trace)} s to settle; terminal level "
      f"{final[ChannelId.S6]:.3f} m, pressure {final[ChannelId.S5]:.0f} Pa")
trace.to_csv(out / "startup.csv")
print(f"traces written under {out}/")
