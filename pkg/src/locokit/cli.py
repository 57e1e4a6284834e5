"""Command-line surface for offline workflows.

Subcommands: preprocess, gen, reward-eval, resolution, curriculum-sim,
buffer-bench, randomize.  Parameter layering is defaults < config file
(--config, JSON or YAML) < explicit flags; every stochastic output is
fixed bit-for-bit by --seed.  Tabular outputs are CSV with a header row
and go to --out, or stdout when --out is omitted (preprocess writes a
directory and requires --out).  Schemas are documented in
docs/FORMATS.md.
"""

import argparse
import csv
import io
import json
import os
import sys
import time

import numpy as np

from locokit import __version__, buffering, curriculum
from locokit.gait.generator import GaitCommand, GeneratorState, step
from locokit.gait.library import (
    DEFAULT_EPSILON,
    DEFAULT_HYSTERESIS,
    DEFAULT_STANDING_THRESHOLD,
    DEFAULT_YAW_THRESHOLD,
    TemplateLibrary,
)
from locokit.ioutil import atomic_write_text
from locokit.motion import clips as motion_clips
from locokit.motion.smoothing import smooth_gaussian
from locokit.motion.templates import resample_phase
from locokit.perception.randomization import (
    RANDOMIZATION_RANGES,
    sample_randomization,
)
from locokit.perception.resolution import resolution_sweep
from locokit.rewards.landing import landing_rewards
from locokit.rewards.tracking import gait_reward, total_reward
from locokit.rewards.types import FootState, RewardConfig, StepSnapshot
from locokit.robot import FEET, NUM_JOINTS


def _fmt(value):
    # repr of a Python float round-trips; numpy scalars repr as np.float64(...)
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _write_csv(out_path, header, rows):
    """Serialize to CSV (floats via repr, lossless) and write atomically."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    if out_path is None:
        sys.stdout.write(buf.getvalue())
    else:
        atomic_write_text(out_path, buf.getvalue())


def _load_config(path):
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith((".yaml", ".yml")):
        import yaml
        doc = yaml.safe_load(text)
    else:
        doc = json.loads(text)
    if doc is None:
        return {}
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: config must be a mapping")
    return doc


def _layer(defaults, config_section, args, keys):
    """defaults < config file < explicit flags; returns a plain namespace."""
    merged = dict(defaults)
    for key, value in (config_section or {}).items():
        if key not in merged:
            raise ValueError(f"unknown config key '{key}'")
        merged[key] = value
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return argparse.Namespace(**merged)


def _float_list(text):
    return [float(v) for v in str(text).split(",") if v != ""]


def _int_list(text):
    return [int(v) for v in str(text).split(",") if v != ""]


# ---------------------------------------------------------------- preprocess

PREPROCESS_DEFAULTS = {
    "clip_range": 1,
    "smooth_sigma": 2.0,
    "contact_threshold": 0.01,
    "phase_samples": 100,
    "reference_foot": "left",
    "wrap_tolerance": 0.05,
    "standing_threshold": DEFAULT_STANDING_THRESHOLD,
    "yaw_threshold": DEFAULT_YAW_THRESHOLD,
    "hysteresis": DEFAULT_HYSTERESIS,
    "epsilon": DEFAULT_EPSILON,
}


def _is_standing_clip(clip, v_th, w_th):
    vx, vy, wz = clip.nominal_velocity
    return float(np.hypot(vx, vy)) <= v_th and abs(float(wz)) <= w_th


def _preprocess_clip(clip, p):
    """One clip -> (template | stand pose, report fields).  Raises on failure."""
    timeline = motion_clips.detect_contacts(clip, p.contact_threshold)
    if _is_standing_clip(clip, p.standing_threshold, p.yaw_threshold):
        smoothed = smooth_gaussian(clip.theta, p.smooth_sigma)
        return {"stand_pose": smoothed.mean(axis=0)}, {
            "status": "standing",
            "cycles": 0,
        }
    spans = motion_clips.segment_cycles(timeline, p.reference_foot)
    # default selector picks the second cycle; fall back to the last
    # available one for short clips
    index = min(p.clip_range, len(spans) - 1)
    cycle = motion_clips.extract_cycle(clip, spans, index)
    cycle.theta = smooth_gaussian(cycle.theta, p.smooth_sigma)
    wrap_gap = float(np.max(np.abs(cycle.theta[-1] - cycle.theta[0])))
    template = resample_phase(
        cycle,
        phase_samples=p.phase_samples,
        contact_threshold=p.contact_threshold,
        wrap_tolerance=p.wrap_tolerance,
    )
    report = {
        "status": "ok",
        "cycles": len(spans),
        "span": list(cycle.span),
        "period": cycle.period,
        "wrap_gap": wrap_gap,
        "nominal_speed": template.nominal_speed,
    }
    return {"template": template}, report


def cmd_preprocess(args, config):
    p = _layer(PREPROCESS_DEFAULTS, config.get("preprocess"), args,
               PREPROCESS_DEFAULTS.keys())
    if args.out is None:
        raise ValueError("preprocess requires --out (template directory)")
    clip_files = sorted(
        f for f in os.listdir(args.clips) if f.endswith(".json")
    )
    if not clip_files:
        raise ValueError(f"no clip files in {args.clips}")

    templates = []
    stand_poses = []
    report = []
    failures = 0
    seen_speeds = {}
    for fname in clip_files:
        entry = {"file": fname}
        try:
            clip = motion_clips.load_raw_clip(os.path.join(args.clips, fname))
            entry["name"] = clip.name
            result, fields = _preprocess_clip(clip, p)
            entry.update(fields)
            if "stand_pose" in result:
                stand_poses.append(result["stand_pose"])
            else:
                template = result["template"]
                speed = template.nominal_speed
                if speed in seen_speeds:
                    raise ValueError(
                        f"duplicate nominal speed {speed} (already from "
                        f"{seen_speeds[speed]})"
                    )
                seen_speeds[speed] = fname
                templates.append(template)
        except Exception as exc:  # noqa: BLE001 - per-clip isolation
            entry["status"] = "failed"
            entry["error"] = str(exc)
            failures += 1
        report.append(entry)

    notes = []
    if not templates:
        raise ValueError("no usable walking clips; cannot build a library")
    templates.sort(key=lambda t: t.nominal_speed)
    if stand_poses:
        stand_pose = np.mean(np.stack(stand_poses), axis=0)
    else:
        stand_pose = templates[0].theta_grid.mean(axis=0)
        notes.append(
            "no standing clip found; stand pose derived from the slowest "
            "template's mean pose"
        )

    library = TemplateLibrary(
        templates,
        stand_pose=stand_pose,
        standing_threshold=p.standing_threshold,
        yaw_threshold=p.yaw_threshold,
        hysteresis=p.hysteresis,
        epsilon=p.epsilon,
    )
    library.save(args.out)
    report_doc = {
        "clips": report,
        "templates": len(templates),
        "failures": failures,
        "notes": notes,
    }
    atomic_write_text(
        os.path.join(args.out, "report.json"), json.dumps(report_doc, indent=1)
    )
    print(
        f"wrote {len(templates)} template(s) to {args.out} "
        f"({failures} clip failure(s))"
    )
    for entry in report:
        if entry.get("status") == "failed":
            print(f"  failed: {entry['file']}: {entry['error']}", file=sys.stderr)
    return 1 if failures else 0


# ----------------------------------------------------------------------- gen

GEN_DEFAULTS = {
    "dt": 0.02,
    "duration": 5.0,
    "vx": 0.0,
    "vy": 0.0,
    "wz": 0.0,
    "profile": None,
}

TRAJECTORY_HEADER = (
    ["t", "phase", "alpha"]
    + [f"theta_d_{j}" for j in range(NUM_JOINTS)]
    + [f"dtheta_d_{j}" for j in range(NUM_JOINTS)]
    + ["contact_left", "contact_right"]
)


def _load_profile(path):
    """Command profile CSV (t, vx, vy, wz): each row takes effect at its t."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append((
                float(rec["t"]),
                GaitCommand(float(rec["vx"]), float(rec["vy"]), float(rec["wz"])),
            ))
    rows.sort(key=lambda r: r[0])
    if not rows:
        raise ValueError(f"{path}: empty command profile")
    return rows


def cmd_gen(args, config):
    p = _layer(GEN_DEFAULTS, config.get("gen"), args, GEN_DEFAULTS.keys())
    library = TemplateLibrary.load(args.templates)
    if p.dt <= 0:
        raise ValueError(f"dt must be positive, got {p.dt}")
    steps = int(round(p.duration / p.dt))
    if steps < 1:
        raise ValueError("duration shorter than one step")
    profile = _load_profile(p.profile) if p.profile else None
    constant = GaitCommand(p.vx, p.vy, p.wz)

    state = GeneratorState()
    rows = []
    for i in range(steps):
        t_start = i * p.dt
        cmd = constant
        if profile:
            for t_cmd, candidate in profile:
                if t_cmd <= t_start:
                    cmd = candidate
                else:
                    break
        state, frame = step(library, state, cmd, p.dt)
        rows.append(
            [(i + 1) * p.dt, frame.phase, state.alpha]
            + list(frame.theta_d)
            + list(frame.delta_theta_d)
            + [frame.contact_left, frame.contact_right]
        )
    _write_csv(args.out, TRAJECTORY_HEADER, rows)
    return 0


# ---------------------------------------------------------------- reward-eval

REWARD_DEFAULTS = {
    "lambda_pos": 5.0,
    "lambda_vel": 4.0,
    "lambda_delta": 10.0,
    "lambda_ankle": 5.0,
    "ankle_indices": "4,10",
}

ROLLOUT_FOOT_COLUMNS = [
    template.format(foot=foot)
    for foot in FEET
    for template in (
        "contact_{foot}", "force_{foot}_x", "force_{foot}_y", "force_{foot}_z",
        "foot_vel_{foot}_x", "foot_vel_{foot}_y", "foot_vel_{foot}_z",
        "foot_height_{foot}", "air_time_{foot}", "edge_dist_{foot}",
    )
]

ROLLOUT_HEADER = (
    ["t", "phase", "walking", "cmd_vx", "cmd_vy", "cmd_wz",
     "base_vel_x", "base_vel_y", "base_vel_z"]
    + [f"theta_{j}" for j in range(NUM_JOINTS)]
    + [f"joint_delta_{j}" for j in range(NUM_JOINTS)]
    + [f"theta_d_{j}" for j in range(NUM_JOINTS)]
    + [f"dtheta_d_{j}" for j in range(NUM_JOINTS)]
    + ROLLOUT_FOOT_COLUMNS
)

REWARD_EVAL_HEADER = (
    ["t", "e_pos", "e_vel", "e_delta", "e_ankle",
     "r_pos", "r_vel", "r_delta", "r_ankle", "r_gait",
     "air", "slide", "dbl_air", "swing", "stumble", "edge_left", "edge_right",
     "r_landing", "total"]
)


class _RefRow:
    def __init__(self, theta_d, delta_theta_d):
        self.theta_d = theta_d
        self.delta_theta_d = delta_theta_d


def _snapshot_from_row(rec):
    def grab(names):
        return np.array([float(rec[n]) for n in names])

    feet = {}
    for foot in FEET:
        feet[foot] = FootState(
            contact=bool(int(float(rec[f"contact_{foot}"]))),
            force=grab([f"force_{foot}_{ax}" for ax in "xyz"]),
            velocity=grab([f"foot_vel_{foot}_{ax}" for ax in "xyz"]),
            height=float(rec[f"foot_height_{foot}"]),
            air_time=float(rec[f"air_time_{foot}"]),
            edge_distance=float(rec[f"edge_dist_{foot}"]),
        )
    snapshot = StepSnapshot(
        command=grab(["cmd_vx", "cmd_vy", "cmd_wz"]),
        joint_pos=grab([f"theta_{j}" for j in range(NUM_JOINTS)]),
        joint_delta=grab([f"joint_delta_{j}" for j in range(NUM_JOINTS)]),
        base_lin_vel=grab(["base_vel_x", "base_vel_y", "base_vel_z"]),
        phase=float(rec["phase"]),
        walking=bool(int(float(rec["walking"]))),
        feet=feet,
    )
    ref = _RefRow(
        theta_d=grab([f"theta_d_{j}" for j in range(NUM_JOINTS)]),
        delta_theta_d=grab([f"dtheta_d_{j}" for j in range(NUM_JOINTS)]),
    )
    return snapshot, ref


def cmd_reward_eval(args, config):
    p = _layer(REWARD_DEFAULTS, config.get("reward_eval"), args,
               REWARD_DEFAULTS.keys())
    reward_config = RewardConfig(
        gait_scales=(p.lambda_pos, p.lambda_vel, p.lambda_delta, p.lambda_ankle),
        ankle_indices=tuple(_int_list(p.ankle_indices)),
    )
    rows = []
    with open(args.rollout, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in ROLLOUT_HEADER if c not in (reader.fieldnames or [])]
        if missing:
            raise ValueError(
                f"{args.rollout}: missing rollout columns {missing[:4]}"
                + ("..." if len(missing) > 4 else "")
            )
        for rec in reader:
            snapshot, ref = _snapshot_from_row(rec)
            cmd = GaitCommand(*snapshot.command)
            gait = gait_reward(snapshot, ref, cmd, reward_config)
            landing = landing_rewards(snapshot, reward_config)
            total, _breakdown = total_reward(gait.weighted, landing.weighted)
            rows.append(
                [float(rec["t"])]
                + [gait.errors[n] for n in ("pos", "vel", "delta", "ankle")]
                + [gait.terms[n] for n in ("pos", "vel", "delta", "ankle")]
                + [gait.total]
                + [landing.weighted[n] for n in (
                    "air", "slide", "dbl_air", "swing", "stumble",
                    "edge_left", "edge_right")]
                + [landing.total, total]
            )
    _write_csv(args.out, REWARD_EVAL_HEADER, rows)
    return 0


# ---------------------------------------------------------------- resolution

RESOLUTION_DEFAULTS = {
    "z0": "0.8",
    "pitch": "45",
    "fov": "58",
    "height": "36",
    "width": "64",
}

RESOLUTION_HEADER = [
    "mount_height", "pitch_deg", "fov_deg", "height_px", "width_px",
    "resolution_m_per_px", "distance_m", "pixels", "pareto",
]


def cmd_resolution(args, config):
    p = _layer(RESOLUTION_DEFAULTS, config.get("resolution"), args,
               RESOLUTION_DEFAULTS.keys())
    points = resolution_sweep(
        _float_list(p.z0),
        _float_list(p.pitch),
        _float_list(p.fov),
        _int_list(p.height),
        _int_list(p.width),
    )
    rows = [
        [pt.mount_height, pt.pitch_deg, pt.fov_deg, pt.height_px, pt.width_px,
         pt.resolution, pt.distance, pt.pixels, int(pt.pareto)]
        for pt in points
    ]
    if len(points) == 1:
        pt = points[0]
        print(
            f"r_v = {pt.resolution:.4f} m/px at distance {pt.distance:.2f} m "
            f"({pt.height_px}x{pt.width_px}, {pt.pixels} px)"
        )
    _write_csv(args.out, RESOLUTION_HEADER, rows)
    return 0


# ------------------------------------------------------------- curriculum-sim

CURRICULUM_DEFAULTS = {
    "num_levels": curriculum.DEFAULT_NUM_LEVELS,
    "promote_frac": curriculum.DEFAULT_PROMOTE_FRAC,
    "demote_frac": curriculum.DEFAULT_DEMOTE_FRAC,
    "init_level": 0,
}

CURRICULUM_HEADER = ["episode", "agent", "terrain", "level", "mean_level"]


def cmd_curriculum_sim(args, config):
    p = _layer(CURRICULUM_DEFAULTS, config.get("curriculum_sim"), args,
               CURRICULUM_DEFAULTS.keys())
    episodes = []
    with open(args.episodes, "r", encoding="utf-8", newline="") as fh:
        for rec in csv.DictReader(fh):
            episodes.append(curriculum.EpisodeOutcome(
                agent=int(rec["agent"]),
                traveled=float(rec["traveled"]),
                commanded=float(rec["commanded"]),
                terminated_early=bool(int(float(rec.get("terminated_early", 0) or 0))),
            ))
    if not episodes:
        raise ValueError(f"{args.episodes}: no episodes")
    num_agents = max(e.agent for e in episodes) + 1

    rng = np.random.default_rng(args.seed)
    specs = curriculum.default_terrain_specs()
    for spec in specs:
        spec.num_levels = p.num_levels
    kinds = [curriculum.sample_terrain(rng, specs).kind for _ in range(num_agents)]
    state = curriculum.CurriculumState(
        kinds,
        num_levels=p.num_levels,
        levels=np.full(num_agents, p.init_level, dtype=np.int64),
        rng=rng,
        promote_frac=p.promote_frac,
        demote_frac=p.demote_frac,
    )
    rows = []
    for i, episode in enumerate(episodes):
        level = curriculum.update_level(state, episode)
        rows.append([i, episode.agent, state.kinds[episode.agent], level,
                     state.mean_level])
    _write_csv(args.out, CURRICULUM_HEADER, rows)
    return 0


# ---------------------------------------------------------------- buffer-bench

BUFFER_DEFAULTS = {
    "envs": 64,
    "steps": 200,
    "rows": 36,
    "cols": 64,
    "history": buffering.DEFAULT_HISTORY,
    "slack": buffering.DEFAULT_SLACK,
    "budgets_gb": "24,48",
    "transient_mb": 24.0,
    "resident_device_mb": 24.0,
    "resident_host_mb": 24.0,
    "fixed_gb": 0.0,
}

BUFFER_HEADER = ["budget_gb", "strategy", "max_envs"]

_GIB = 1024 ** 3
_MIB = 1024 ** 2


def cmd_buffer_bench(args, config):
    p = _layer(BUFFER_DEFAULTS, config.get("buffer_bench"), args,
               BUFFER_DEFAULTS.keys())
    rng = np.random.default_rng(args.seed)
    buf = buffering.TieredBuffer(
        p.envs, frame_shape=(p.rows, p.cols), history=p.history, slack=p.slack
    )
    frame = rng.random((p.rows, p.cols)).astype(np.float32)
    start = time.perf_counter()
    for step_idx in range(p.steps):
        for env in range(p.envs):
            buf.push(env, step_idx, frame)
        if step_idx % 4 == 0:
            buf.fetch_stack(step_idx % p.envs)
    elapsed = time.perf_counter() - start
    pushed = p.steps * p.envs
    print(f"pushed {pushed} frames in {elapsed:.3f} s "
          f"({pushed / elapsed:.0f} frames/s)")
    print(f"retained high-water mark: {buf.high_water} frames "
          f"({buf.high_water * p.rows * p.cols * 4 / _MIB:.1f} MiB)")

    rows = []
    for budget_gb in _float_list(p.budgets_gb):
        for strategy in buffering.STRATEGIES:
            plan = buffering.CapacityPlan(
                budget=int(budget_gb * _GIB),
                per_env_transient=int(p.transient_mb * _MIB),
                per_env_resident_device=int(p.resident_device_mb * _MIB),
                per_env_resident_host=int(p.resident_host_mb * _MIB),
                fixed_overhead=int(p.fixed_gb * _GIB),
                strategy=strategy,
            )
            rows.append([budget_gb, strategy, buffering.plan_capacity(plan)])
    _write_csv(args.out, BUFFER_HEADER, rows)
    return 0


# ------------------------------------------------------------------ randomize

RANDOMIZE_DEFAULTS = {"n": 5}

RANDOMIZE_HEADER = ["index"] + list(RANDOMIZATION_RANGES)


def cmd_randomize(args, config):
    p = _layer(RANDOMIZE_DEFAULTS, config.get("randomize"), args,
               RANDOMIZE_DEFAULTS.keys())
    if p.n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(args.seed)
    rows = []
    for i in range(p.n):
        draw = sample_randomization(rng)
        rows.append([i] + [draw.as_dict()[name] for name in RANDOMIZATION_RANGES])
    _write_csv(args.out, RANDOMIZE_HEADER, rows)
    return 0


# --------------------------------------------------------------------- parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog="locokit",
        description="Gait templates, reference generation, reward evaluation, "
                    "camera analysis, curriculum and buffering tools.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="random seed; fixes all stochastic outputs")
    common.add_argument("--config", default=None,
                        help="JSON or YAML config file (section per subcommand)")
    common.add_argument("--out", default=None,
                        help="output path (CSV file, or directory for preprocess); "
                             "stdout when omitted")

    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("preprocess", parents=[common],
                        help="distill raw motion clips into a template library")
    sp.add_argument("clips", help="directory of clip JSON files")
    sp.add_argument("--clip-range", dest="clip_range", type=int)
    sp.add_argument("--smooth-sigma", dest="smooth_sigma", type=float)
    sp.add_argument("--contact-threshold", dest="contact_threshold", type=float)
    sp.add_argument("--phase-samples", dest="phase_samples", type=int)
    sp.add_argument("--reference-foot", dest="reference_foot",
                    choices=list(FEET))
    sp.add_argument("--wrap-tolerance", dest="wrap_tolerance", type=float)
    sp.add_argument("--standing-threshold", dest="standing_threshold", type=float)
    sp.add_argument("--yaw-threshold", dest="yaw_threshold", type=float)
    sp.add_argument("--hysteresis", dest="hysteresis", type=float)
    sp.add_argument("--epsilon", dest="epsilon", type=float)
    sp.set_defaults(func=cmd_preprocess)

    sp = sub.add_parser("gen", parents=[common],
                        help="generate a reference trajectory CSV")
    sp.add_argument("templates", help="template library directory")
    sp.add_argument("--dt", type=float)
    sp.add_argument("--duration", type=float)
    sp.add_argument("--vx", type=float)
    sp.add_argument("--vy", type=float)
    sp.add_argument("--wz", type=float)
    sp.add_argument("--profile", help="command profile CSV (t,vx,vy,wz)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("reward-eval", parents=[common],
                        help="evaluate rewards over a rollout log")
    sp.add_argument("rollout", help="rollout CSV (one step per row)")
    sp.add_argument("--lambda-pos", dest="lambda_pos", type=float)
    sp.add_argument("--lambda-vel", dest="lambda_vel", type=float)
    sp.add_argument("--lambda-delta", dest="lambda_delta", type=float)
    sp.add_argument("--lambda-ankle", dest="lambda_ankle", type=float)
    sp.add_argument("--ankle-indices", dest="ankle_indices",
                    help="comma-separated joint indices")
    sp.set_defaults(func=cmd_reward_eval)

    sp = sub.add_parser("resolution", parents=[common],
                        help="depth-camera resolution sweep")
    sp.add_argument("--z0", help="mount height(s), m (comma list)")
    sp.add_argument("--pitch", help="pitch angle(s), deg")
    sp.add_argument("--fov", help="vertical FOV(s), deg")
    sp.add_argument("--height", help="image height(s), px")
    sp.add_argument("--width", help="image width(s), px")
    sp.set_defaults(func=cmd_resolution)

    sp = sub.add_parser("curriculum-sim", parents=[common],
                        help="replay an episode log through the curriculum")
    sp.add_argument("episodes", help="episode CSV (agent,traveled,commanded)")
    sp.add_argument("--num-levels", dest="num_levels", type=int)
    sp.add_argument("--promote-frac", dest="promote_frac", type=float)
    sp.add_argument("--demote-frac", dest="demote_frac", type=float)
    sp.add_argument("--init-level", dest="init_level", type=int)
    sp.set_defaults(func=cmd_curriculum_sim)

    sp = sub.add_parser("buffer-bench", parents=[common],
                        help="buffer throughput bench and capacity planner table")
    sp.add_argument("--envs", type=int)
    sp.add_argument("--steps", type=int)
    sp.add_argument("--rows", type=int)
    sp.add_argument("--cols", type=int)
    sp.add_argument("--history", type=int)
    sp.add_argument("--slack", type=int)
    sp.add_argument("--budgets-gb", dest="budgets_gb",
                    help="device budgets in GiB (comma list)")
    sp.add_argument("--transient-mb", dest="transient_mb", type=float)
    sp.add_argument("--resident-device-mb", dest="resident_device_mb", type=float)
    sp.add_argument("--resident-host-mb", dest="resident_host_mb", type=float)
    sp.add_argument("--fixed-gb", dest="fixed_gb", type=float)
    sp.set_defaults(func=cmd_buffer_bench)

    sp = sub.add_parser("randomize", parents=[common],
                        help="sample domain randomization draws")
    sp.add_argument("--n", type=int)
    sp.set_defaults(func=cmd_randomize)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return args.func(args, config)
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
