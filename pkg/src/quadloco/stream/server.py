"""Live session service over WebSocket.

The simulation stays single-threaded inside one asyncio task: commands from
any number of clients go into a queue that is drained at tick boundaries in
arrival order, and every tick's state frame fans out to all clients. A slow
client gets coalesced state frames (only the newest is kept for it) but
never reordered ones; acks, errors and events are never dropped.
"""
from __future__ import annotations

import asyncio
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from websockets.asyncio.server import serve as ws_serve

from quadloco.errors import BindFailure, ConfigError, LevelError, QuadlocoError
from quadloco.mapper.calibration import calibration_from_neutral
from quadloco.mapper.config import MapperConfig
from quadloco.ingest.synth import NEUTRAL_POSE
from quadloco.physics.level import BUNDLED_LEVELS, load_level
from quadloco.session.loop import Phase, Session
from quadloco.stream.patterns import PatternSource
from quadloco.stream.protocol import (
    Command,
    LimbInput,
    LoadLevel,
    Pause,
    PlatformSnapshot,
    ProtocolError,
    Reset,
    Resume,
    SetParam,
    StateFrame,
    encode_ack,
    encode_error,
    encode_event,
    encode_hello,
    encode_level,
    encode_state,
    parse_command,
)

SessionFactory = Callable[[Optional[int], MapperConfig], Session]


def default_session_factory(level_id: Optional[int], cfg: MapperConfig) -> Session:
    """Interactive session: pattern-driven input, neutral calibration."""
    level = load_level(level_id if level_id is not None else 1)
    return Session(level, PatternSource(), cfg,
                   calibration=calibration_from_neutral(NEUTRAL_POSE))


@dataclass(eq=False)
class _Client:
    conn: object
    ordered: deque = field(default_factory=deque)
    latest_state: Optional[str] = None
    wake: asyncio.Event = field(default_factory=asyncio.Event)

    def push_ordered(self, text: str) -> None:
        self.ordered.append(text)
        self.wake.set()

    def push_state(self, text: str) -> None:
        self.latest_state = text
        self.wake.set()


class StreamServer:
    def __init__(self, host: str = "127.0.0.1", port: int = 8765,
                 session_factory: SessionFactory = default_session_factory,
                 cfg: Optional[MapperConfig] = None,
                 level_id: Optional[int] = None,
                 pace_hz: Optional[float] = None):
        self.host = host
        self.port = port
        self.session_factory = session_factory
        self.cfg = cfg or MapperConfig()
        self.level_id = level_id
        self.pace_hz = 60.0 if pace_hz is None else pace_hz
        self.session = session_factory(level_id, self.cfg)
        self.clients: set[_Client] = set()
        self.commands: asyncio.Queue[tuple[Optional[_Client], Command]] = asyncio.Queue()
        self.seq = 0
        self.paused = False
        self._server = None
        self._sim_task: Optional[asyncio.Task] = None
        self._stopping = asyncio.Event()

    # -- lifecycle --

    async def start(self) -> None:
        try:
            self._server = await ws_serve(self._handler, self.host, self.port)
        except OSError as exc:
            raise BindFailure(f"cannot bind {self.host}:{self.port}: {exc}") from exc
        self.port = self._server.sockets[0].getsockname()[1]
        self._sim_task = asyncio.create_task(self._sim_loop())

    def request_stop(self) -> None:
        self._stopping.set()

    async def stop(self) -> None:
        self._stopping.set()
        if self._sim_task is not None:
            await self._sim_task
        if self._server is not None:
            self._server.close()
            await self._server.wait_closed()

    async def run_until_stopped(self) -> None:
        await self._stopping.wait()

    # -- client handling --

    async def _handler(self, conn) -> None:
        client = _Client(conn)
        client.push_ordered(encode_hello(sorted(BUNDLED_LEVELS),
                                         self.session.cfg.as_dict()))
        client.push_ordered(encode_level(self.session.level))
        self.clients.add(client)
        sender = asyncio.create_task(self._sender(client))
        try:
            async for raw in conn:
                try:
                    cmd = parse_command(raw)
                except ProtocolError as exc:
                    client.push_ordered(encode_error(str(exc)))
                    continue
                await self.commands.put((client, cmd))
        except Exception:
            pass
        finally:
            self.clients.discard(client)
            sender.cancel()

    async def _sender(self, client: _Client) -> None:
        try:
            while True:
                await client.wake.wait()
                client.wake.clear()
                while client.ordered:
                    await client.conn.send(client.ordered.popleft())
                if client.latest_state is not None:
                    text, client.latest_state = client.latest_state, None
                    await client.conn.send(text)
        except asyncio.CancelledError:
            pass
        except Exception:
            self.clients.discard(client)

    # -- simulation --

    def _apply(self, client: Optional[_Client], cmd: Command) -> None:
        def ack(ok: bool = True, **detail) -> None:
            if client is not None:
                client.push_ordered(encode_ack(cmd.kind, ok, detail or None))

        if isinstance(cmd, SetParam):
            try:
                new_cfg = self.session.cfg.replace(**{cmd.key: cmd.value})
            except (ConfigError, QuadlocoError) as exc:
                ack(ok=False, message=f"{type(exc).__name__}: {exc}")
                return
            self.session.cfg = new_cfg
            self.cfg = new_cfg
            ack(config=new_cfg.as_dict())
        elif isinstance(cmd, LoadLevel):
            try:
                self.session = self.session_factory(cmd.level, self.cfg)
            except LevelError as exc:
                ack(ok=False, message=str(exc))
                return
            self.level_id = cmd.level
            ack(level=cmd.level)
            self._broadcast_ordered(encode_level(self.session.level))
        elif isinstance(cmd, Reset):
            self.session = self.session_factory(self.level_id, self.cfg)
            ack()
            self._broadcast_ordered(encode_level(self.session.level))
        elif isinstance(cmd, LimbInput):
            source = self.session.source
            if not isinstance(source, PatternSource):
                ack(ok=False, message="session input is not pattern-driven")
                return
            if cmd.pattern == "paddle":
                source.paddle(cmd.action == "press", cmd.limbs)
            else:
                if cmd.action == "press":
                    source.flick(cmd.limbs)
            ack()
        elif isinstance(cmd, Pause):
            self.paused = True
            ack()
        elif isinstance(cmd, Resume):
            self.paused = False
            ack()

    def _broadcast_ordered(self, text: str) -> None:
        for c in self.clients:
            c.push_ordered(text)

    def _tick_once(self) -> None:
        events = self.session.tick()
        self.seq += 1
        frame = StateFrame(
            seq=self.seq,
            tick=self.session.tick_count,
            clock=self.session.clock,
            phase=self.session.phase.value,
            position=self.session.avatar.position,
            velocity=self.session.avatar.velocity,
            grounded=self.session.avatar.grounded,
            pose=self.session.pose,
            limbs=self.session.last_output.debug,
            events=tuple(events),
            platforms=tuple(PlatformSnapshot(p.center, p.solid)
                            for p in self.session.world.platforms),
        )
        text = encode_state(frame)
        for c in self.clients:
            c.push_state(text)
        for event in events:
            self._broadcast_ordered(encode_event(event))

    async def _sim_loop(self) -> None:
        loop = asyncio.get_running_loop()
        deadline = loop.time()
        while not self._stopping.is_set():
            while True:
                try:
                    client, cmd = self.commands.get_nowait()
                except asyncio.QueueEmpty:
                    break
                self._apply(client, cmd)
            if not self.paused and self.session.phase is not Phase.FINISHED:
                self._tick_once()
            if self.pace_hz > 0:
                deadline += 1.0 / self.pace_hz
                delay = deadline - loop.time()
                if delay > 0:
                    await asyncio.sleep(delay)
                else:
                    deadline = loop.time()
            else:
                await asyncio.sleep(0)


async def serve(host: str, port: int,
                session_factory: SessionFactory = default_session_factory,
                cfg: Optional[MapperConfig] = None,
                level_id: Optional[int] = None,
                pace_hz: Optional[float] = None) -> StreamServer:
    """Bind and start the service; returns the running server."""
    server = StreamServer(host, port, session_factory, cfg, level_id, pace_hz)
    await server.start()
    return server
