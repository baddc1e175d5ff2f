import { GameSocket } from './socket.js';
import { InputDriver } from './input.js';
import { render } from './render.js';
import { TuningPanel } from './tuning.js';
import { ViewModel } from './viewmodel.js';
import { commands } from './protocol.js';

const params = new URLSearchParams(location.search);
const wsUrl = params.get('ws') ?? `ws://${location.hostname || '127.0.0.1'}:8765`;

const canvas = document.getElementById('view') as HTMLCanvasElement;
const ctx = canvas.getContext('2d')!;
const panelRoot = document.getElementById('params')!;
const levelSelect = document.getElementById('level') as HTMLSelectElement;
const resetButton = document.getElementById('reset') as HTMLButtonElement;
const pauseButton = document.getElementById('pause') as HTMLButtonElement;

const vm = new ViewModel();
const socket = new GameSocket(wsUrl, vm, (msg) => vm.apply(msg));
const input = new InputDriver(socket.send, vm);
const panel = new TuningPanel(panelRoot, socket.send, vm);

input.attach(window);
socket.connect();

let levelOptionsBuilt = false;
function syncControls(): void {
  if (!levelOptionsBuilt && vm.levels.length > 0) {
    for (const id of vm.levels) {
      const opt = document.createElement('option');
      opt.value = String(id);
      opt.textContent = `level ${id}`;
      levelSelect.append(opt);
    }
    levelOptionsBuilt = true;
  }
  pauseButton.textContent = vm.paused ? 'resume' : 'pause';
}

levelSelect.addEventListener('change', () => {
  if (!socket.send(commands.loadLevel(Number(levelSelect.value)))) {
    vm.noteDroppedCommand();
  }
});
resetButton.addEventListener('click', () => {
  if (!socket.send(commands.reset())) vm.noteDroppedCommand();
});
pauseButton.addEventListener('click', () => {
  const text = vm.paused ? commands.resume() : commands.pause();
  if (!socket.send(text)) vm.noteDroppedCommand();
});

function frame(): void {
  const w = canvas.clientWidth;
  const h = canvas.clientHeight;
  if (canvas.width !== w || canvas.height !== h) {
    canvas.width = w;
    canvas.height = h;
  }
  render(ctx, vm, w, h);
  panel.sync();
  syncControls();
  requestAnimationFrame(frame);
}
requestAnimationFrame(frame);
