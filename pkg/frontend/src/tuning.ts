// Live parameter panel. Every row shows the server-acked value; edits send
// set_param and the input snaps back to whatever the server confirms, so a
// rejected change (bad value, unknown key) visibly does not stick.

import { commands } from './protocol.js';
import { SendFn } from './input.js';
import { ViewModel } from './viewmodel.js';

const PARAM_HINTS: Record<string, string> = {
  c: 'contact zone thickness (m)',
  b_xz: 'forward boost',
  b_y: 'jump vertical boost',
  b_z: 'jump lunge boost',
  v_y_max: 'jump vertical cap (m/s)',
  v_z_max: 'jump forward cap (m/s)',
  speed_threshold: 'limb speed gate (m/s)',
  jump_trigger: 'jump limb speed (m/s)',
  coyote: 'coyote window (s)',
};

export class TuningPanel {
  private inputs = new Map<string, HTMLInputElement>();
  private errors = new Map<string, HTMLElement>();
  private built = false;

  constructor(private root: HTMLElement, private send: SendFn,
              private vm: ViewModel) {}

  private buildRows(): void {
    for (const key of Object.keys(this.vm.config)) {
      const row = document.createElement('div');
      row.className = 'param-row';

      const label = document.createElement('label');
      label.textContent = key;
      label.title = PARAM_HINTS[key] ?? key;

      const input = document.createElement('input');
      input.type = 'number';
      input.step = 'any';
      input.addEventListener('change', () => this.submit(key, input.value));

      const err = document.createElement('span');
      err.className = 'param-error';

      row.append(label, input, err);
      this.root.append(row);
      this.inputs.set(key, input);
      this.errors.set(key, err);
    }
    this.built = true;
  }

  private submit(key: string, rawValue: string): void {
    const value = Number(rawValue);
    if (!Number.isFinite(value)) {
      this.errors.get(key)!.textContent = 'not a number';
      return;
    }
    this.vm.expectParamAck(key);
    if (!this.send(commands.setParam(key, value))) {
      this.vm.noteDroppedCommand();
      this.errors.get(key)!.textContent = 'disconnected';
    }
  }

  // called from the render loop; reflects acked config + inline rejections
  sync(): void {
    if (!this.built && Object.keys(this.vm.config).length > 0) this.buildRows();
    for (const [key, input] of this.inputs) {
      if (document.activeElement !== input) {
        input.value = String(this.vm.config[key] ?? '');
      }
      this.errors.get(key)!.textContent = this.vm.paramErrors[key] ?? '';
    }
  }
}
