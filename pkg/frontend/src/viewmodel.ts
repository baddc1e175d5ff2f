// Client-side state. Server authority is absolute: the renderer only ever
// sees positions and parameter values that arrived in a server message.
// Incoming state frames replace the previous one (coalescing by
// replacement), so memory stays bounded no matter how fast frames arrive.

import {
  AckMsg,
  EventPayload,
  HelloMsg,
  LevelMsg,
  ServerMsg,
  StateMsg,
} from './protocol.js';

export type ConnectionStatus = 'connecting' | 'open' | 'closed';

const EVENT_LOG_LIMIT = 50;

export class ViewModel {
  connection: ConnectionStatus = 'connecting';
  versionMismatch: string | null = null;

  latest: StateMsg | null = null;
  level: LevelMsg | null = null;
  levels: number[] = [];

  // parameter panel: server-acked values only, plus inline rejections
  config: Record<string, number> = {};
  paramErrors: Record<string, string> = {};
  private pendingParams: string[] = [];

  // input pattern state (what the player is holding, for the HUD)
  heldPatterns = new Set<string>();
  paused = false;

  droppedCommands = 0;
  framesSeen = 0;
  framesCoalesced = 0;   // seq jumps tell us how many frames we skipped
  eventLog: EventPayload[] = [];

  apply(msg: ServerMsg): void {
    switch (msg.type) {
      case 'hello':
        this.onHello(msg);
        break;
      case 'level':
        this.level = msg;
        break;
      case 'state':
        this.onState(msg);
        break;
      case 'ack':
        this.onAck(msg);
        break;
      case 'event':
        this.pushEvent(msg);
        break;
      case 'error':
        this.pushEvent({ kind: `server error: ${msg.message}` });
        break;
    }
  }

  private onHello(msg: HelloMsg): void {
    this.levels = msg.levels;
    this.config = { ...msg.config };
  }

  private onState(msg: StateMsg): void {
    if (this.latest !== null) {
      const gap = msg.seq - this.latest.seq;
      if (gap > 1) this.framesCoalesced += gap - 1;
    }
    this.latest = msg;
    this.framesSeen += 1;
  }

  private onAck(msg: AckMsg): void {
    if (msg.cmd === 'set_param') {
      const key = this.pendingParams.shift() ?? '?';
      if (msg.ok && msg.detail?.config) {
        this.config = { ...msg.detail.config };
        delete this.paramErrors[key];
      } else {
        this.paramErrors[key] = msg.detail?.message ?? 'rejected';
      }
      return;
    }
    if (msg.cmd === 'pause' && msg.ok) this.paused = true;
    if (msg.cmd === 'resume' && msg.ok) this.paused = false;
    if (!msg.ok) {
      this.pushEvent({ kind: `${msg.cmd} rejected: ${msg.detail?.message ?? ''}` });
    }
  }

  private pushEvent(e: EventPayload): void {
    this.eventLog.push(e);
    if (this.eventLog.length > EVENT_LOG_LIMIT) {
      this.eventLog.splice(0, this.eventLog.length - EVENT_LOG_LIMIT);
    }
  }

  // the tuning panel calls this right before sending set_param, so the next
  // set_param ack (acks arrive in command order) resolves to this key
  expectParamAck(key: string): void {
    this.pendingParams.push(key);
  }

  noteDroppedCommand(): void {
    this.droppedCommands += 1;
  }

  onConnectionChange(status: ConnectionStatus): void {
    this.connection = status;
    if (status !== 'open') {
      this.heldPatterns.clear();
      this.pendingParams = [];
    }
  }
}
