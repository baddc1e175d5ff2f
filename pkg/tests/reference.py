"""Deliberately naive scalar re-implementation of the movement equations.

Everything here works on plain floats and dicts, separately from the
production code, so the two routes can be compared without sharing bugs.
"""
from __future__ import annotations

import math

# limb order doubles as the jump tie-break order
LIMBS = ("leftHand", "rightHand", "leftFoot", "rightFoot")


def ref_contact_weight(d, c):
    w = 1.0 - d / c
    if w < 0.0:
        w = 0.0
    return w


def ref_locomotion(limbs, cfg):
    """limbs: list of dicts {vx, vy, vz, d, lost}. Returns (x, y, z) or None."""
    total_w = 0.0
    sum_z = 0.0
    for limb in limbs:
        if limb.get("lost"):
            continue
        speed = math.sqrt(limb["vx"] ** 2 + limb["vy"] ** 2 + limb["vz"] ** 2)
        if speed <= cfg["speed_threshold"]:
            continue
        w = ref_contact_weight(limb["d"], cfg["c"])
        if w <= 0.0:
            continue
        total_w += w
        sum_z += w * limb["vz"]
    if total_w == 0.0:
        return None
    forward = cfg["b_xz"] * sum_z / total_w
    if forward < 0.0:
        forward = 0.0
    return (0.0, 0.0, forward)


def ref_clip(x, lo, hi):
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


def ref_jump(limbs, avatar_vy, avatar_vz, grounded, cfg):
    """limbs as in ref_locomotion plus 'fresh'. Returns (v_y, v_z) or None."""
    if not grounded:
        return None
    best = None
    for limb in limbs:
        if limb.get("lost") or not limb.get("fresh", True):
            continue
        v_up = limb["vy"]
        if v_up <= cfg["jump_trigger"]:
            continue
        cand = (ref_clip(cfg["b_y"] * v_up, avatar_vy, cfg["v_y_max"]),
                ref_clip(avatar_vz + cfg["b_z"] * v_up, avatar_vz, cfg["v_z_max"]))
        if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] > best[1]):
            best = cand
    return best


def ref_coyote(grounded_now, last_grounded, now, coyote):
    return grounded_now or (now - last_grounded) <= coyote


# --- jump-sweep displacement (same half-sine velocity pulse the generator
# promises, written out independently) ---

def ref_jump_lift(t, peak, onset, pulse):
    s = t - onset
    if s <= 0.0:
        return 0.0
    if s >= pulse:
        return peak * 2.0 * pulse / math.pi
    return peak * (pulse / math.pi) * (1.0 - math.cos(math.pi * s / pulse))


def ref_jump_fd_velocities(peak, onset, duration, rate, pulse):
    """Finite-difference vertical limb velocity between adjacent samples."""
    n = int(round(duration * rate))
    lifts = [ref_jump_lift(i / rate, peak, onset, pulse) for i in range(n)]
    return [(lifts[i] - lifts[i - 1]) * rate for i in range(1, n)]


def ref_gap_jump_clears(peak, *, cfg, gravity=9.81, rate=60.0, sensor_rate=30.0,
                        onset=0.5, duration=3.0, pulse=0.4,
                        spawn_z=3.4, half_y=0.22, half_z=0.35,
                        runway_end=4.0, far_start=5.2, kill_y=-3.0):
    """Tick-level scalar rehearsal of a standing jump over the gap.

    Mirrors the engine's per-tick order (override, gravity, move z then y)
    without using any of its code. Returns True when the avatar lands on the
    far platform, False when it drops into the gap or smacks the far wall.
    """
    dt = 1.0 / rate
    z = spawn_z
    y = half_y                      # box center; feet at y - half_y, tops at 0
    vy = vz = 0.0
    grounded = True
    last_grounded = 0.0
    feet_dy_prev = 0.0
    tick = 0
    max_ticks = int(duration * rate) + int(5.0 * rate)
    while tick < max_ticks:
        t = tick / rate
        now = (tick + 1) / rate
        fresh = tick % 2 == 0
        jump = None
        loco = None
        if fresh and tick >= 2:
            i = tick // 2
            lift_now = ref_jump_lift(i / sensor_rate, peak, onset, pulse)
            v_limb = (lift_now - feet_dy_prev) * sensor_rate
            feet_dy_prev = lift_now
            d = lift_now              # limbs start on the calibrated floor
            limbs = [{"vx": 0.0, "vy": v_limb, "vz": 0.0, "d": d, "fresh": True}
                     for _ in LIMBS]
            coyote_ok = ref_coyote(grounded, last_grounded, t, cfg["coyote"])
            jump = ref_jump(limbs, vy, vz, coyote_ok, cfg)
            loco = ref_locomotion(limbs, cfg)
        if jump is not None:
            vy, vz = jump
        elif loco is not None:
            vz = loco[2]
        elif grounded:
            vz *= 0.92
        if not (grounded and vy <= 0.0):
            vy -= gravity * dt

        # z axis first, with the far platform's side face blocking
        z_new = z + vz * dt
        feet = y - half_y
        if feet < 0.0 and z + half_z <= far_start < z_new + half_z:
            z_new = far_start - half_z
            vz = 0.0
        z = z_new

        # then y, landing on whichever platform is under the footprint
        y = y + vy * dt
        feet = y - half_y
        if feet < 0.0 and vy <= 0.0:
            on_runway = z - half_z < runway_end
            on_far = z + half_z > far_start
            if on_runway or on_far:
                y = half_y
                vy = 0.0
                grounded = True
                last_grounded = now
                if on_far:
                    return True
            else:
                grounded = False
        else:
            grounded = grounded and feet <= 0.0 and z - half_z < runway_end
            if grounded:
                last_grounded = now
        if y < kill_y:
            return False
        tick += 1
    return False


def ref_min_clearing_peak(cfg, lo=1.0, hi=4.0, resolution=0.01, **kwargs):
    """Smallest sweep peak speed (rounded up to `resolution`) that clears the
    gap in the scalar rehearsal."""
    if not ref_gap_jump_clears(hi, cfg=cfg, **kwargs):
        raise AssertionError("upper bracket does not clear the gap")
    while hi - lo > resolution / 4.0:
        mid = (lo + hi) / 2.0
        if ref_gap_jump_clears(mid, cfg=cfg, **kwargs):
            hi = mid
        else:
            lo = mid
    return math.ceil(hi / resolution) * resolution


def ref_map_frame(prev_joints, cur_joints, lost_flags, dt, floor_y,
                  avatar_vy, avatar_vz, grounded_now, last_grounded, now, cfg):
    """From-scratch rehearsal of the whole per-sample mapping.

    prev/cur_joints: {limb: (x, y, z)} for the four end effectors.
    Returns (locomotion_or_None, jump_or_None).
    """
    limbs = []
    for limb in LIMBS:
        px, py, pz = prev_joints[limb]
        cx, cy, cz = cur_joints[limb]
        lost = lost_flags.get(limb, False)
        if lost:
            vx = vy = vz = 0.0
        else:
            vx = (cx - px) / dt
            vy = (cy - py) / dt
            vz = (cz - pz) / dt
        d = cy - floor_y
        if d < 0.0:
            d = 0.0
        limbs.append({"vx": vx, "vy": vy, "vz": vz, "d": d, "lost": lost,
                      "fresh": True})
    coyote_ok = ref_coyote(grounded_now, last_grounded, now, cfg["coyote"])
    jump = ref_jump(limbs, avatar_vy, avatar_vz, coyote_ok, cfg)
    loco = ref_locomotion(limbs, cfg)
    return loco, jump


def ref_gait_completion_time(frequency, amplitude, *, cfg, lift=0.28,
                             gravity=9.81, rate=60.0, sensor_rate=30.0,
                             finish_z=10.0, friction=0.92, floor_rest=0.05):
    """Scalar rehearsal of paddling down a flat runway: predicts the session
    clock at which the avatar crosses finish_z. Returns None if it never
    does within two minutes."""
    dt = 1.0 / rate
    two_pi = 2.0 * math.pi

    def limb_state(i, phase_offset):
        # generator waveforms: z sweep A*sin, lift (1-cos)/2, sampled at i/30
        t = i / sensor_rate
        ph = two_pi * frequency * t + phase_offset
        z = amplitude * math.sin(ph)
        y = lift * (1.0 - math.cos(ph)) / 2.0
        return y, z

    prev = {0.0: limb_state(0, 0.0), math.pi: limb_state(0, math.pi)}
    z_avatar = 0.0
    vz = 0.0
    tick = 0
    max_ticks = int(120.0 * rate)
    while tick < max_ticks:
        fresh = tick % 2 == 0
        loco = None
        if fresh and tick >= 2:
            i = tick // 2
            limbs = []
            for off in (0.0, math.pi):
                y0, z0 = prev[off]
                y1, z1 = limb_state(i, off)
                prev[off] = (y1, z1)
                limb = {"vx": 0.0, "vy": (y1 - y0) * sensor_rate,
                        "vz": (z1 - z0) * sensor_rate, "d": y1, "lost": False,
                        "fresh": True}
                limbs.extend([limb, dict(limb)])  # diagonal pairs move together
            assert all(l["vy"] <= cfg["jump_trigger"] for l in limbs), \
                "gait rehearsal must not trigger jumps"
            loco = ref_locomotion(limbs, cfg)
        if loco is not None:
            vz = loco[2]
        else:
            vz *= friction
        z_avatar += vz * dt
        tick += 1
        if z_avatar >= finish_z:
            return tick / rate
    return None
