// Keyboard steering: holding the forward key paddles, tapping the jump key
// flicks. Commands go out at input rate; when the socket is down they are
// dropped and counted so the HUD can show it.

import { commands, Pattern, PatternAction } from './protocol.js';
import { ViewModel } from './viewmodel.js';

export type SendFn = (text: string) => boolean;

export const KEY_PADDLE = ['ArrowRight', 'KeyD', 'KeyW'];
export const KEY_FLICK = ['Space', 'ArrowUp'];

export class InputDriver {
  private held = new Set<string>();

  constructor(private send: SendFn, private vm: ViewModel) {}

  private emit(pattern: Pattern, action: PatternAction): void {
    if (!this.send(commands.limbInput(pattern, action))) {
      this.vm.noteDroppedCommand();
      return;
    }
    if (pattern === 'paddle') {
      if (action === 'press') this.vm.heldPatterns.add('paddle');
      else this.vm.heldPatterns.delete('paddle');
    }
  }

  keyDown(code: string, repeat = false): void {
    if (repeat || this.held.has(code)) return; // auto-repeat is not a new press
    this.held.add(code);
    if (KEY_PADDLE.includes(code)) this.emit('paddle', 'press');
    else if (KEY_FLICK.includes(code)) this.emit('flick', 'press');
  }

  keyUp(code: string): void {
    this.held.delete(code);
    if (KEY_PADDLE.includes(code)) {
      // only release the paddle once no paddle-bound key is held
      if (!KEY_PADDLE.some((k) => this.held.has(k))) this.emit('paddle', 'release');
    }
  }

  releaseAll(): void {
    if (KEY_PADDLE.some((k) => this.held.has(k))) this.emit('paddle', 'release');
    this.held.clear();
  }

  attach(target: { addEventListener: Window['addEventListener'] }): void {
    target.addEventListener('keydown', (e: KeyboardEvent) => {
      if (KEY_PADDLE.includes(e.code) || KEY_FLICK.includes(e.code)) {
        e.preventDefault();
        this.keyDown(e.code, e.repeat);
      }
    });
    target.addEventListener('keyup', (e: KeyboardEvent) => this.keyUp(e.code));
    target.addEventListener('blur', () => this.releaseAll());
  }
}
