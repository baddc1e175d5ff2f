// Wire protocol: one self-describing JSON object per WebSocket text frame,
// always carrying the protocol version. Mirrors the server's message
// catalogue: hello, level, state, event, ack, error in; the command set out.

export const PROTOCOL_VERSION = '1';

export type Vec3 = [number, number, number];

export interface LimbDebug {
  v: Vec3;
  d: number;      // ground distance, m
  w: number;      // contact weight 0..1
  fresh: boolean;
  lost: boolean;
}

export interface StateMsg {
  type: 'state';
  seq: number;
  tick: number;
  clock: number;
  phase: string;
  avatar: { position: Vec3; velocity: Vec3; grounded: boolean };
  pose: { feet: Record<string, Vec3>; pitch: number; degraded: boolean };
  limbs: Record<string, LimbDebug>;
  events: EventPayload[];
  platforms: [number, number, number, boolean][]; // center xyz + solid
}

export interface EventPayload {
  kind: string;
  index?: number;
  time?: number;
}

export interface HelloMsg {
  type: 'hello';
  levels: number[];
  config: Record<string, number>;
}

export interface LevelPlatform {
  kind: 'static' | 'falling' | 'moving';
  center: Vec3;
  half: Vec3;
}

export interface LevelMsg {
  type: 'level';
  name: string;
  spawn: Vec3;
  kill_y: number;
  finish_z: number;
  platforms: LevelPlatform[];
  checkpoints: Vec3[];
}

export interface AckMsg {
  type: 'ack';
  cmd: string;
  ok: boolean;
  detail?: { config?: Record<string, number>; message?: string; level?: number };
}

export interface EventMsg extends EventPayload {
  type: 'event';
}

export interface ErrorMsg {
  type: 'error';
  message: string;
}

export type ServerMsg = StateMsg | HelloMsg | LevelMsg | AckMsg | EventMsg | ErrorMsg;

export class VersionMismatchError extends Error {
  constructor(public got: unknown) {
    super(`protocol version mismatch: client speaks ${PROTOCOL_VERSION}, server sent ${String(got)}`);
  }
}

export function parseServerMessage(raw: string): ServerMsg {
  let msg: Record<string, unknown>;
  try {
    msg = JSON.parse(raw);
  } catch {
    throw new Error('server sent invalid JSON');
  }
  if (typeof msg !== 'object' || msg === null) {
    throw new Error('server message is not an object');
  }
  if (msg.version !== PROTOCOL_VERSION) {
    throw new VersionMismatchError(msg.version);
  }
  const kind = msg.type;
  if (kind === 'state' || kind === 'hello' || kind === 'level' ||
      kind === 'ack' || kind === 'event' || kind === 'error') {
    return msg as unknown as ServerMsg;
  }
  throw new Error(`unknown server message type ${String(kind)}`);
}

// --- outgoing commands ---

export type Pattern = 'paddle' | 'flick';
export type PatternAction = 'press' | 'release';

export interface Command {
  type: string;
  [key: string]: unknown;
}

function withVersion(body: Command): string {
  return JSON.stringify({ version: PROTOCOL_VERSION, ...body });
}

export const commands = {
  loadLevel: (level: number) => withVersion({ type: 'load_level', level }),
  reset: () => withVersion({ type: 'reset' }),
  setParam: (key: string, value: number) =>
    withVersion({ type: 'set_param', key, value }),
  limbInput: (pattern: Pattern, action: PatternAction, limbs: string[] = []) =>
    withVersion(limbs.length
      ? { type: 'limb_input', pattern, action, limbs }
      : { type: 'limb_input', pattern, action }),
  pause: () => withVersion({ type: 'pause' }),
  resume: () => withVersion({ type: 'resume' }),
};
