// Side-view canvas renderer. World axes: z runs right across the screen,
// y runs up. The camera follows the avatar with a fixed lead. The bottom
// left inset shows the live per-limb tracking debug (velocity arrow,
// ground distance bar, contact weight fill).

import { LimbDebug, StateMsg, Vec3 } from './protocol.js';
import { ViewModel } from './viewmodel.js';

const PX_PER_M = 60;
const CAMERA_LEAD_M = 2.0;
const AVATAR_HALF: Vec3 = [0.18, 0.22, 0.35];

const COLORS = {
  sky: '#10141c',
  platform: '#4a5568',
  falling: '#b7791f',
  fallingGone: 'rgba(183,121,31,0.25)',
  moving: '#2b6cb0',
  avatar: '#ed8936',
  avatarAir: '#f6ad55',
  foot: '#fbd38d',
  checkpoint: '#48bb78',
  finish: '#9f7aea',
  kill: '#e53e3e',
  text: '#e2e8f0',
  inset: 'rgba(0,0,0,0.55)',
  weight: '#68d391',
  stale: '#718096',
};

const LIMB_ORDER = ['leftHand', 'rightHand', 'leftFoot', 'rightFoot'];

export function render(ctx: CanvasRenderingContext2D, vm: ViewModel,
                       width: number, height: number): void {
  ctx.fillStyle = COLORS.sky;
  ctx.fillRect(0, 0, width, height);

  const frame = vm.latest;
  const camZ = (frame ? frame.avatar.position[2] : 0) + CAMERA_LEAD_M;
  const camY = frame ? Math.max(frame.avatar.position[1], 0.5) : 0.5;
  const toX = (z: number) => width / 2 + (z - camZ) * PX_PER_M;
  const toY = (y: number) => height * 0.6 - (y - camY) * PX_PER_M;

  drawLevel(ctx, vm, frame, toX, toY, height);
  if (frame) drawAvatar(ctx, frame, toX, toY);
  drawHud(ctx, vm, width);
  if (frame) drawDebugInset(ctx, frame.limbs, height);
  drawBanners(ctx, vm, width, height);
}

function drawLevel(ctx: CanvasRenderingContext2D, vm: ViewModel,
                   frame: StateMsg | null,
                   toX: (z: number) => number, toY: (y: number) => number,
                   height: number): void {
  const level = vm.level;
  if (!level) return;

  level.platforms.forEach((p, i) => {
    // live center + solidity when the state frame carries them
    const snap = frame?.platforms?.[i];
    const center = snap ? [snap[0], snap[1], snap[2]] as Vec3 : p.center;
    const solid = snap ? snap[3] : true;
    const x = toX(center[2] - p.half[2]);
    const w = 2 * p.half[2] * PX_PER_M;
    const y = toY(center[1] + p.half[1]);
    const h = 2 * p.half[1] * PX_PER_M;
    ctx.fillStyle = p.kind === 'falling'
      ? (solid ? COLORS.falling : COLORS.fallingGone)
      : p.kind === 'moving' ? COLORS.moving : COLORS.platform;
    ctx.fillRect(x, y, w, h);
  });

  for (const cp of level.checkpoints) {
    const x = toX(cp[2]);
    ctx.strokeStyle = COLORS.checkpoint;
    ctx.setLineDash([6, 6]);
    ctx.beginPath();
    ctx.moveTo(x, 0);
    ctx.lineTo(x, height);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  const fx = toX(level.finish_z);
  ctx.strokeStyle = COLORS.finish;
  ctx.lineWidth = 3;
  ctx.beginPath();
  ctx.moveTo(fx, 0);
  ctx.lineTo(fx, height);
  ctx.stroke();
  ctx.lineWidth = 1;

  const ky = toY(level.kill_y);
  if (ky < height) {
    ctx.fillStyle = COLORS.kill;
    ctx.globalAlpha = 0.25;
    ctx.fillRect(0, ky, ctx.canvas.width, height - ky);
    ctx.globalAlpha = 1;
  }
}

function drawAvatar(ctx: CanvasRenderingContext2D, frame: StateMsg,
                    toX: (z: number) => number, toY: (y: number) => number): void {
  const [, py, pz] = frame.avatar.position;
  const x = toX(pz - AVATAR_HALF[2]);
  const y = toY(py + AVATAR_HALF[1]);
  const w = 2 * AVATAR_HALF[2] * PX_PER_M;
  const h = 2 * AVATAR_HALF[1] * PX_PER_M;

  ctx.save();
  ctx.translate(toX(pz), toY(py));
  ctx.rotate(-frame.pose.pitch);
  ctx.fillStyle = frame.avatar.grounded ? COLORS.avatar : COLORS.avatarAir;
  ctx.fillRect(x - toX(pz), y - toY(py), w, h);
  ctx.restore();

  // feet from the retargeted pose, in avatar-local space
  ctx.fillStyle = COLORS.foot;
  for (const name of Object.keys(frame.pose.feet)) {
    const [, fy, fz] = frame.pose.feet[name];
    ctx.beginPath();
    ctx.arc(toX(pz + fz), toY(py + fy), 4, 0, Math.PI * 2);
    ctx.fill();
  }
}

function drawHud(ctx: CanvasRenderingContext2D, vm: ViewModel, width: number): void {
  const frame = vm.latest;
  ctx.fillStyle = COLORS.text;
  ctx.font = '13px monospace';
  const level = vm.level ? vm.level.name : '...';
  const clock = frame ? frame.clock.toFixed(2) : '0.00';
  const speed = frame ? frame.avatar.velocity[2].toFixed(2) : '0.00';
  const grounded = frame?.avatar.grounded ? 'grounded' : 'airborne';
  ctx.fillText(`${level}  t=${clock}s  vz=${speed} m/s  ${grounded}`, 10, 18);
  ctx.fillText(
    `frames ${vm.framesSeen} (coalesced ${vm.framesCoalesced})  ` +
    `dropped cmds ${vm.droppedCommands}` +
    (vm.heldPatterns.has('paddle') ? '  [paddling]' : '') +
    (vm.paused ? '  [paused - inputs queued]' : ''),
    10, 36);
  const lastEvents = vm.eventLog.slice(-3).map((e) =>
    e.index !== undefined ? `${e.kind}#${e.index}` : e.kind);
  if (lastEvents.length) {
    ctx.fillText(lastEvents.join('  '), width - 10 - lastEvents.join('  ').length * 8, 18);
  }
}

// Fig-3-style tracking inset: one column per limb
function drawDebugInset(ctx: CanvasRenderingContext2D,
                        limbs: Record<string, LimbDebug>, height: number): void {
  const w = 220;
  const h = 120;
  const x0 = 10;
  const y0 = height - h - 10;
  ctx.fillStyle = COLORS.inset;
  ctx.fillRect(x0, y0, w, h);
  ctx.strokeStyle = COLORS.stale;
  ctx.strokeRect(x0, y0, w, h);
  ctx.font = '10px monospace';

  LIMB_ORDER.forEach((name, i) => {
    const limb = limbs[name];
    if (!limb) return;
    const cx = x0 + 30 + i * 52;
    const baseY = y0 + h - 22;
    // ground distance bar (up to the 0.5 m the inset can show)
    const barH = Math.min(limb.d / 0.5, 1) * (h - 50);
    ctx.fillStyle = limb.lost ? COLORS.kill : limb.fresh ? COLORS.text : COLORS.stale;
    ctx.fillRect(cx - 3, baseY - barH, 6, barH);
    // contact weight fill under the bar
    ctx.fillStyle = COLORS.weight;
    ctx.fillRect(cx - 12, baseY + 2, 24 * limb.w, 4);
    // velocity arrow (z right, y up)
    ctx.strokeStyle = COLORS.avatar;
    ctx.beginPath();
    ctx.moveTo(cx, baseY - barH);
    ctx.lineTo(cx + limb.v[2] * 8, baseY - barH - limb.v[1] * 8);
    ctx.stroke();
    ctx.fillStyle = COLORS.text;
    ctx.fillText(name.replace('left', 'L').replace('right', 'R').replace('Hand', 'H').replace('Foot', 'F'),
                 cx - 10, y0 + h - 8);
  });
}

function drawBanners(ctx: CanvasRenderingContext2D, vm: ViewModel,
                     width: number, height: number): void {
  if (vm.versionMismatch) {
    banner(ctx, vm.versionMismatch, COLORS.kill, width, height / 2 - 40);
    return;
  }
  if (vm.connection !== 'open') {
    banner(ctx, vm.connection === 'connecting'
      ? 'connecting to simulation...' : 'connection lost - retrying',
      COLORS.falling, width, 50);
  }
  if (vm.latest && vm.latest.phase === 'finished') {
    banner(ctx, 'level finished!', COLORS.checkpoint, width, height / 2 - 40);
  }
}

function banner(ctx: CanvasRenderingContext2D, text: string, color: string,
                width: number, y: number): void {
  ctx.fillStyle = color;
  ctx.globalAlpha = 0.85;
  ctx.fillRect(0, y, width, 32);
  ctx.globalAlpha = 1;
  ctx.fillStyle = '#fff';
  ctx.font = '15px monospace';
  ctx.textAlign = 'center';
  ctx.fillText(text, width / 2, y + 21);
  ctx.textAlign = 'left';
}
