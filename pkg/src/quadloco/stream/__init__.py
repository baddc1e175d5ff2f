from quadloco.stream.patterns import PatternSource
from quadloco.stream.protocol import (
    PROTOCOL_VERSION,
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
    decode_state,
    encode_ack,
    encode_error,
    encode_event,
    encode_hello,
    encode_level,
    encode_state,
    parse_command,
)
from quadloco.stream.server import StreamServer, default_session_factory, serve

__all__ = [
    "Command",
    "LimbInput",
    "LoadLevel",
    "PROTOCOL_VERSION",
    "PatternSource",
    "Pause",
    "PlatformSnapshot",
    "ProtocolError",
    "Reset",
    "Resume",
    "SetParam",
    "StateFrame",
    "StreamServer",
    "decode_state",
    "default_session_factory",
    "encode_ack",
    "encode_error",
    "encode_event",
    "encode_hello",
    "encode_level",
    "encode_state",
    "parse_command",
    "serve",
]
