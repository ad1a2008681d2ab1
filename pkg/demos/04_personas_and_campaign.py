"""Operator personas and a small expert-vs-novice campaign.

Personas are samplers fitted to published five-point summaries of
operator studies: detection and restoration durations per scenario.
A Monte Carlo campaign draws one detection and one restoration per
iteration, runs the episode, scores every channel, and the report
compares the two groups with Mann-Whitney tests.
"""

from pathlib import Path

import numpy as np

from resbench.campaign import (
    MonteCarloConfig,
    monte_carlo,
    nominal_trace,
    report,
    write_campaign,
    write_report,
)
from resbench.config import load_config, load_personas
from resbench.stats import render_summary_table, render_test_table, summarize

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

personas = load_personas()
rng = np.random.default_rng(0)
print("10,000 draws per persona (scenario 1, detection):")
for persona in ("expert", "novice"):
    sampler = personas[("scenario1", persona, "detection")]
    draws = sampler.sample(rng, size=10_000)
    s = summarize(draws)
    print(f"  {persona:>6}: mean {s.mean:6.1f}s  median {s.q50:6.1f}s  "
          f"range [{s.minimum:.0f}, {s.maximum:.0f}]")
print()

config = load_config()
iterations = 40  # keep the demo quick; campaigns default to 500
groups = {}
for persona, seed in (("expert", 7), ("novice", 8)):
    mc = MonteCarloConfig(
        iterations=iterations, master_seed=seed, scenario_id="scenario1",
        persona=persona, workers=2, keep_curves=False,
    )
    print(f"running {iterations} {persona} iterations ...")
    groups[persona] = monte_carlo(mc, config)
    write_campaign(groups[persona], out / persona, nominal=nominal_trace(config),
                   group=persona)

bundle = report(groups)
print()
for persona in groups:
    table = {
        v: bundle.summaries[persona][v]
        for v in ("detection_time", "restoration_time", "R_S6", "R_S7", "R_QOUT")
    }
    print(render_summary_table(table, title=f"[{persona}]"))
print(render_test_table(bundle.tests, title="[expert vs novice, Mann-Whitney]"))
write_report(bundle, out)
print(f"summary.csv / tests.csv / scatter.csv written under {out}/")
