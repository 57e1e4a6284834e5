"""Binding contract: batched outputs match loops of scalar core calls
bit for bit, sessions are isolated, and the core version is locked."""

import numpy as np
import pytest

import locokit
import locokit_bindings as lb
from locokit.gait.generator import GaitCommand, GeneratorState, step
from locokit.gait.library import TemplateLibrary
from locokit.motion.templates import GaitTemplate
from locokit.perception.randomization import RANDOMIZATION_RANGES
from locokit.rewards.tracking import gait_reward
from locokit.rewards.types import RewardConfig, StepSnapshot


def synthetic_library(speeds=(0.4, 0.9, 1.6), k=64):
    templates = []
    for i, speed in enumerate(speeds):
        phi = np.arange(k) / k
        amp = 0.2 + 0.1 * i
        theta = amp * np.sin(2 * np.pi * phi)[:, None] * \
            np.linspace(0.5, 1.5, 12)
        stance = 0.55 + 0.04 * i
        templates.append(GaitTemplate(
            nominal_speed=float(speed), period=0.9 - 0.1 * i,
            theta_grid=theta,
            stance_ratio={"left": stance, "right": stance},
            stance_window={"left": (0.0, stance),
                           "right": (0.5, (0.5 + stance) % 1.0)},
        ))
    return TemplateLibrary(templates, stand_pose=np.full(12, 0.1))


@pytest.fixture(scope="module")
def library():
    return synthetic_library()


@pytest.fixture(scope="module")
def library_dir(tmp_path_factory):
    lib = synthetic_library()
    path = tmp_path_factory.mktemp("lib") / "library"
    lib.save(str(path))
    return str(path)


class _Ref:
    def __init__(self, theta_d, delta_theta_d):
        self.theta_d = theta_d
        self.delta_theta_d = delta_theta_d


def random_commands(rng, n):
    return np.stack([rng.uniform(-2, 2, n), rng.uniform(-0.5, 0.5, n),
                     rng.uniform(-1, 1, n)], axis=1)


# ---------------------------------------------------------------- version

def test_core_version_lockstep(monkeypatch, library):
    monkeypatch.setattr(locokit, "__version__", "99.0.0")
    with pytest.raises(lb.CoreVersionError):
        lb.load_library("anywhere")
    with pytest.raises(lb.CoreVersionError):
        lb.new_session(library, 4)
    with pytest.raises(lb.CoreVersionError):
        lb.sample_randomization(1, 0)


def test_load_library_round_trip(library_dir):
    lib = lb.load_library(library_dir)
    assert list(lib.speeds) == [0.4, 0.9, 1.6]


# ------------------------------------------------------------- batch_step

def test_n1_equals_core_step(library):
    session = lb.new_session(library, 1)
    state = GeneratorState()
    rng = np.random.default_rng(0)
    for _ in range(20):
        cmd = random_commands(rng, 1)
        theta_d, delta_d, left, right, phase = lb.batch_step(
            session, cmd, 0.02)
        state, frame = step(library, state, GaitCommand(*cmd[0]), 0.02)
        assert np.array_equal(theta_d[0], frame.theta_d)
        assert np.array_equal(delta_d[0], frame.delta_theta_d)
        assert (int(left[0]), int(right[0])) == \
            (frame.contact_left, frame.contact_right)
        assert phase[0] == frame.phase


def test_identical_commands_identical_rows(library):
    session = lb.new_session(library, 64)
    cmd = np.tile([0.8, 0.1, -0.3], (64, 1))
    for _ in range(5):
        theta_d, delta_d, left, right, phase = lb.batch_step(
            session, cmd, 0.02)
        for arr in (theta_d, delta_d):
            assert np.array_equal(arr, np.tile(arr[0], (64, 1)))
        for arr in (left, right, phase):
            assert np.array_equal(arr, np.full(64, arr[0]))


def test_batch_step_bitwise_vs_singles(library):
    rng = np.random.default_rng(1)
    for batch in range(100):
        n = int(rng.integers(1, 257))
        session = lb.new_session(library, n)
        states = [GeneratorState() for _ in range(n)]
        for _ in range(int(rng.integers(1, 4))):
            commands = random_commands(rng, n)
            dt = float(rng.uniform(0.0, 0.1))
            theta_d, delta_d, left, right, phase = lb.batch_step(
                session, commands, dt)
            for i in range(n):
                states[i], frame = step(
                    library, states[i], GaitCommand(*commands[i]), dt)
                assert theta_d[i].tobytes() == frame.theta_d.tobytes()
                assert delta_d[i].tobytes() == frame.delta_theta_d.tobytes()
                assert (int(left[i]), int(right[i])) == \
                    (frame.contact_left, frame.contact_right)
                assert float(phase[i]).hex() == float(frame.phase).hex()


def test_batch_step_shape_mismatch(library):
    session = lb.new_session(library, 8)
    with pytest.raises(ValueError, match=r"\(8, 3\)"):
        lb.batch_step(session, np.zeros((4, 3)), 0.02)


# ------------------------------------------------------ batch_gait_reward

def random_reward_inputs(rng, n):
    snapshots = {
        "joint_pos": rng.normal(size=(n, 12)),
        "base_vel": rng.normal(size=(n, 3)),
        "joint_delta": rng.normal(scale=0.1, size=(n, 12)),
        "command": random_commands(rng, n),
    }
    refs = {
        "theta_d": rng.normal(size=(n, 12)),
        "delta_theta_d": rng.normal(scale=0.1, size=(n, 12)),
    }
    return snapshots, refs


def scalar_reward(snapshots, refs, i, config):
    snap = StepSnapshot(
        joint_pos=snapshots["joint_pos"][i],
        base_lin_vel=snapshots["base_vel"][i],
        joint_delta=snapshots["joint_delta"][i],
    )
    ref = _Ref(refs["theta_d"][i], refs["delta_theta_d"][i])
    return gait_reward(snap, ref, GaitCommand(*snapshots["command"][i]),
                       config)


def test_reward_n1_equals_core(library):
    session = lb.new_session(library, 1)
    snapshots, refs = random_reward_inputs(np.random.default_rng(2), 1)
    [got] = lb.batch_gait_reward(session, snapshots, refs)
    want = scalar_reward(snapshots, refs, 0, session.config)
    assert got["errors"] == want.errors
    assert got["terms"] == want.terms
    assert got["weighted"] == want.weighted
    assert got["total"] == want.total


def test_reward_identical_rows(library):
    session = lb.new_session(library, 64)
    one_snap, one_ref = random_reward_inputs(np.random.default_rng(3), 1)
    snapshots = {k: np.tile(v[0], (64, 1)) for k, v in one_snap.items()}
    refs = {k: np.tile(v[0], (64, 1)) for k, v in one_ref.items()}
    maps = lb.batch_gait_reward(session, snapshots, refs)
    assert all(m == maps[0] for m in maps)


def test_reward_bitwise_vs_singles(library):
    rng = np.random.default_rng(4)
    for batch in range(100):
        n = int(rng.integers(1, 257))
        session = lb.new_session(library, n)
        snapshots, refs = random_reward_inputs(rng, n)
        maps = lb.batch_gait_reward(session, snapshots, refs)
        for i in range(n):
            want = scalar_reward(snapshots, refs, i, session.config)
            assert maps[i]["errors"] == want.errors
            assert maps[i]["terms"] == want.terms
            assert maps[i]["weighted"] == want.weighted
            assert float(maps[i]["total"]).hex() == float(want.total).hex()


def test_reward_custom_config(library):
    config = RewardConfig(gait_scales=(1.0, 2.0, 3.0, 4.0))
    session = lb.new_session(library, 3, config=config)
    snapshots, refs = random_reward_inputs(np.random.default_rng(5), 3)
    maps = lb.batch_gait_reward(session, snapshots, refs)
    for i in range(3):
        want = scalar_reward(snapshots, refs, i, config)
        assert maps[i]["terms"] == want.terms


def test_reward_shape_mismatch(library):
    session = lb.new_session(library, 4)
    snapshots, refs = random_reward_inputs(np.random.default_rng(6), 4)
    snapshots["base_vel"] = snapshots["base_vel"][:, :2]
    with pytest.raises(ValueError, match="base_vel"):
        lb.batch_gait_reward(session, snapshots, refs)


# ----------------------------------------------------------- session state

def test_sessions_share_no_state(library):
    a = lb.new_session(library, 8)
    b = lb.new_session(library, 8)
    before = b.phase
    rng = np.random.default_rng(7)
    for _ in range(10):
        lb.batch_step(a, random_commands(rng, 8), 0.05)
    assert np.array_equal(b.phase, before)
    assert not np.array_equal(a.phase, before)


def test_same_seed_sessions_evolve_identically(library):
    a = lb.new_session(library, 16, seed=42)
    b = lb.new_session(library, 16, seed=42)
    rng = np.random.default_rng(8)
    for _ in range(10):
        commands = random_commands(rng, 16)
        out_a = lb.batch_step(a, commands, 0.02)
        out_b = lb.batch_step(b, commands, 0.02)
        for x, y in zip(out_a, out_b):
            assert np.array_equal(x, y)
    assert a.sample_randomization(5) == b.sample_randomization(5)


def test_session_reset(library):
    session = lb.new_session(library, 4)
    lb.batch_step(session, np.tile([1.0, 0, 0], (4, 1)), 0.3)
    session.reset()
    assert np.array_equal(session.phase, np.zeros(4))


# ------------------------------------------------------------ randomization

def test_sample_randomization_deterministic():
    a = lb.sample_randomization(20, seed=9)
    b = lb.sample_randomization(20, seed=9)
    c = lb.sample_randomization(20, seed=10)
    assert a == b
    assert a != c
    assert len(a) == 20
    for draw in a:
        assert set(draw) == set(RANDOMIZATION_RANGES)
        for name, (lo, hi) in RANDOMIZATION_RANGES.items():
            assert lo <= draw[name] <= hi

    assert lb.sample_randomization(0, seed=0) == []
