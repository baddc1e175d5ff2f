from quadloco.session.loop import (
    GameEvent,
    Phase,
    Session,
    SessionMetrics,
    run_headless,
)
from quadloco.session.statelog import (
    TickRecord,
    format_record,
    parse_log,
    parse_record,
    run_hash,
)

__all__ = [
    "GameEvent",
    "Phase",
    "Session",
    "SessionMetrics",
    "TickRecord",
    "format_record",
    "parse_log",
    "parse_record",
    "run_hash",
    "run_headless",
]
