"""A live session with a scripted operator at the console protocol.

The telemetry service ticks the plant in real (scaled) time, publishes
reported values over WebSocket, and logs every frame.  Here a scripted
client plays the operator: notices the spoof, acknowledges the anomaly,
takes exclusivity, shuts the plant down, recalibrates the level sensor
during the off phase, and restarts.  The session log then yields the
same operator-times record a persona draw would provide, and the replay
feeds the batch scoring pipeline.
"""

import asyncio
import json
from pathlib import Path

from aiohttp import ClientSession, web

from resbench.campaign import nominal_trace, score_episode
from resbench.channels import ChannelId
from resbench.config import load_config
from resbench.episode import EpisodeResult
from resbench.telemetry import (
    ServeConfig,
    SessionServer,
    extract_operator_times,
    replay,
)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
log_path = out / "live_session.jsonl"

config = load_config()


async def operator(port: int, server: SessionServer) -> None:
    async with ClientSession() as http:
        async with http.ws_connect(f"ws://127.0.0.1:{port}/session") as ws:
            async def command(topic, payload=None, key=None):
                await ws.send_str(json.dumps({
                    "kind": "command", "topic": topic,
                    "payload": payload or {}, "key": key or topic,
                }))

            while server.t < 12.0:  # watching the trends...
                await asyncio.sleep(0.01)
            print(f"  t={server.t:.0f}s operator: that level cannot be right")
            await command("op/ack-anomaly")
            await command("op/mode", {"mode": "exclusivity"})
            await command("op/shutdown")
            while server.phase != "off":
                await asyncio.sleep(0.01)
            print(f"  t={server.t:.0f}s plant is off; recalibrating the level sensor")
            await command("op/recalibrate", {"channel": "S6"})
            await command("op/restart")
            print(f"  t={server.t:.0f}s restarted; automation is back in charge")


async def main() -> None:
    serve_cfg = ServeConfig(
        scenario_id="scenario1", timescale=0.0, port=0,
        log_path=str(log_path), t1=5.0, settle_residual=1e-3,
    )
    server = SessionServer(serve_cfg, config)
    app = server.build_app()
    runner = web.AppRunner(app)
    await runner.setup()
    site = web.TCPSite(runner, "127.0.0.1", 0)
    await site.start()
    port = site._server.sockets[0].getsockname()[1]
    print(f"session service on ws://127.0.0.1:{port}/session (unthrottled)")
    run_task = asyncio.create_task(server.run())
    await operator(port, server)
    await run_task
    await runner.cleanup()
    server.close()


asyncio.run(main())

times = extract_operator_times(str(log_path), t1=5.0)
print(f"\noperator times from the log: detection {times.detection:.0f}s, "
      f"restoration {times.restoration:.0f}s ({times.provenance})")

trace, timeline = replay(str(log_path))
print(f"replayed {len(trace)} samples; timeline {timeline.t1:.0f} / "
      f"{timeline.t2:.0f} / {timeline.t3:.0f} / {timeline.t4:.0f}")

episode = EpisodeResult(
    index=0, operator_times=times, timeline=timeline, trace=trace,
)
scored = score_episode(episode, nominal_trace(config), config)
print("scores from the live session:")
for cid in (ChannelId.S6, ChannelId.S7, ChannelId.QOUT):
    print(f"  R_{cid.value} = {scored[cid].r_value:+.3f}")
