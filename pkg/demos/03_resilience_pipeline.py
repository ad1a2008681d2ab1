"""One episode through the scoring pipeline, stage by stage.

An expert-grade operator detects the level spoof after 254 s and needs
30 s of recalibration.  The tank-level channel is walked through every
post-processing stage: cyclic trimming, warping, alignment, anomaly
segmentation, masking, and the final area ratio.
"""

from pathlib import Path

import numpy as np

from resbench.campaign import nominal_trace, score_episode
from resbench.channels import CHANNELS, ChannelId
from resbench.config import load_config, load_scenario
from resbench.episode import run_episode
from resbench.operators import OperatorTimes
from resbench.resilience import (
    align,
    detect_anomalies,
    dtw,
    dump_stages,
    mask_and_score,
    results_to_csv,
    trim_cyclic,
)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

config = load_config()
scenario = load_scenario("scenario1", config)
times = OperatorTimes(detection=254.0, restoration=30.0, provenance="persona draw")
episode = run_episode(scenario, times, config)
tl = episode.timeline
print(f"episode timeline: attack at {tl.t1:.0f}s, detected {tl.t2:.0f}s, "
      f"plant off {tl.t3:.0f}s, restarted {tl.t4:.0f}s, {len(episode.trace)} samples")

nominal = nominal_trace(config)
disrupted = episode.trace.channel(ChannelId.S6)

trimmed = trim_cyclic(nominal.channel(ChannelId.S6), len(disrupted))
print(f"1. nominal trimmed cyclically from {len(nominal)} to {len(trimmed)} samples")

path = dtw(trimmed, disrupted)
print(f"2. warp path: {len(path.pairs)} pairs, cost {path.cost:.4g} "
      f"({'diagonal' if np.array_equal(path.pairs[:, 0], path.pairs[:, 1]) else 'warped'})")

aligned = align(trimmed, disrupted, path)
print(f"3. aligned onto the nominal axis: {len(aligned)} samples")

segments = detect_anomalies(trimmed, aligned)
print(f"4. anomaly spans (5% / 50 / 500 rule): "
      + ", ".join(f"[{s.start}..{s.end}] peak {s.peak_deviation:.0%}" for s in segments))

result = mask_and_score(trimmed, aligned, segments, dt=1.0, channel="S6")
print(f"5. masked areas As={result.area_nominal:.2f}, Ad={result.area_disrupted:.2f} "
      f"-> R = {result.r_value:.3f}")
print()

scored = score_episode(episode, nominal, config)
print("all channels:")
for cid in CHANNELS:
    r = scored[cid]
    flag = "  (negative, flagged)" if r.negative else ""
    print(f"  R_{cid.value:<5} = {r.r_value:+.3f}{flag}")
results_to_csv([scored[cid] for cid in CHANNELS], out / "resilience_one_episode.csv")
dump_stages(scored[ChannelId.S6], out / "stages")
print(f"per-channel results and the S6 stage dump written under {out}/")
