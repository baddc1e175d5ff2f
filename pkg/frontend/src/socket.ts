// Reconnecting WebSocket wrapper. Parses every message through the
// versioned protocol layer; a version mismatch freezes reconnection and
// surfaces prominently instead of retry-looping against an incompatible
// server.

import { parseServerMessage, ServerMsg, VersionMismatchError } from './protocol.js';
import { ViewModel } from './viewmodel.js';

const BACKOFF_START_MS = 500;
const BACKOFF_MAX_MS = 8000;

export class GameSocket {
  private ws: WebSocket | null = null;
  private backoff = BACKOFF_START_MS;
  private stopped = false;

  constructor(
    private url: string,
    private vm: ViewModel,
    private onMessage: (msg: ServerMsg) => void,
  ) {}

  connect(): void {
    if (this.stopped) return;
    this.vm.onConnectionChange('connecting');
    this.ws = new WebSocket(this.url);
    this.ws.onopen = () => {
      this.backoff = BACKOFF_START_MS;
      this.vm.onConnectionChange('open');
    };
    this.ws.onmessage = (ev) => {
      let msg: ServerMsg;
      try {
        msg = parseServerMessage(String(ev.data));
      } catch (err) {
        if (err instanceof VersionMismatchError) {
          this.vm.versionMismatch = err.message;
          this.stop(); // do not keep talking to an incompatible server
        }
        return;
      }
      this.onMessage(msg);
    };
    this.ws.onclose = () => {
      this.vm.onConnectionChange('closed');
      this.scheduleReconnect();
    };
    this.ws.onerror = () => {
      this.ws?.close();
    };
  }

  private scheduleReconnect(): void {
    if (this.stopped) return;
    setTimeout(() => this.connect(), this.backoff);
    this.backoff = Math.min(this.backoff * 2, BACKOFF_MAX_MS);
  }

  send = (text: string): boolean => {
    if (this.ws === null || this.ws.readyState !== WebSocket.OPEN) return false;
    this.ws.send(text);
    return true;
  };

  stop(): void {
    this.stopped = true;
    this.ws?.close();
  }
}
