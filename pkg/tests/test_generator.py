"""Gait generator: selection, blending, phase, standing, batch equality."""

import numpy as np
import pytest

from conftest import make_library
from locokit import kernels
from locokit.gait.generator import (
    BatchGenerator,
    GaitCommand,
    GeneratorState,
    advance_phase,
    blend_period,
    blend_pose,
    contact_indicators,
    neighbor_select,
    step,
)


def circ_dist(a, b):
    d = np.abs(np.mod(a - b, 1.0))
    return np.minimum(d, 1.0 - d)


def walking_state(phase=0.0):
    return GeneratorState(phase=phase, standing=False)


# ------------------------------------------------------------- selection


def test_neighbor_select_brackets(library):
    lower, upper, alpha = neighbor_select(library, 0.75)
    assert lower.nominal_speed == 0.5
    assert upper.nominal_speed == 1.0
    assert alpha == pytest.approx(0.5, abs=1e-6)


def test_neighbor_select_clamps_out_of_range(library):
    lower, upper, alpha = neighbor_select(library, 0.1)
    assert lower.nominal_speed == upper.nominal_speed == 0.5
    assert alpha == 0.0
    lower, upper, alpha = neighbor_select(library, 9.0)
    assert lower.nominal_speed == upper.nominal_speed == 1.5
    assert alpha == 1.0


def test_neighbor_select_uses_absolute_speed(library):
    fwd = neighbor_select(library, 0.75)
    back = neighbor_select(library, -0.75)
    assert back[0] is fwd[0] and back[1] is fwd[1]
    assert back[2] == fwd[2]


def test_exact_template_speed_gives_that_template(library):
    for speed in library.speeds:
        lower, upper, alpha = neighbor_select(library, float(speed))
        assert lower.nominal_speed == speed
        assert alpha == 0.0
        state = walking_state(phase=0.37)
        pose = blend_pose(library, state, GaitCommand(float(speed), 0.3, 0.0))
        k = lower.theta_grid.shape[0]
        want = kernels.pure.blend_pose_batch(
            lower.theta_grid[None], np.array([0]), np.array([0]),
            np.array([0.0]), np.array([0.37]),
        )[0]
        assert np.array_equal(pose, want)
        del k


def test_blend_period_formula():
    assert blend_period(0.8, 0.6, 0.25) == pytest.approx(0.75)
    with pytest.raises(ValueError, match="alpha"):
        blend_period(0.8, 0.6, 1.5)
    with pytest.raises(ValueError, match="positive"):
        blend_period(0.0, 0.6, 0.5)


def test_advance_phase_wraps():
    assert advance_phase(0.9, 0.2, 1.0) == pytest.approx(0.1)
    assert advance_phase(0.0, 0.5, 0.5) == 0.0
    assert 0.0 <= advance_phase(0.999999, 1e-7, 1.0) < 1.0
    with pytest.raises(ValueError, match="period"):
        advance_phase(0.5, 0.1, 0.0)


# ------------------------------------------------------ property suites


def test_alpha_always_in_unit_interval(library):
    rng = np.random.default_rng(41)
    n = 10_000
    bg = BatchGenerator(library, n)
    commands = np.stack([
        rng.uniform(-3.0, 3.0, n),     # beyond the covered speed range
        rng.uniform(-1.0, 1.0, n),
        rng.uniform(-2.0, 2.0, n),
    ], axis=1)
    bg.step(commands, 0.02)
    assert np.all(bg.alpha >= 0.0)
    assert np.all(bg.alpha <= 1.0)


def test_blend_is_convex_elementwise(library):
    rng = np.random.default_rng(42)
    n = 10_000
    bg = BatchGenerator(library, n)
    bg.standing[:] = False
    bg.phase = rng.random(n)
    commands = np.stack([
        rng.uniform(0.15, 2.0, n),
        np.zeros(n),
        np.zeros(n),
    ], axis=1)
    theta_d, _, _, phase = bg.step(commands, 0.02)

    from locokit.gait.generator import _select_arrays
    lo, hi, alpha = _select_arrays(library._speeds, commands[:, 0],
                                   library.epsilon)
    pose_lo = kernels.blend_pose_batch(library._grids, lo, lo,
                                       np.zeros(n), phase)
    pose_hi = kernels.blend_pose_batch(library._grids, hi, hi,
                                       np.zeros(n), phase)
    low = np.minimum(pose_lo, pose_hi)
    high = np.maximum(pose_lo, pose_hi)
    guard = 1e-12 * np.maximum(1.0, np.abs(high))
    assert np.all(theta_d >= low - guard)
    assert np.all(theta_d <= high + guard)


def test_phase_stays_in_unit_interval(library):
    rng = np.random.default_rng(43)
    n = 2_000
    bg = BatchGenerator(library, n)
    for _ in range(40):
        commands = np.stack([
            rng.uniform(-2.0, 2.0, n),
            rng.uniform(-0.5, 0.5, n),
            rng.uniform(-1.0, 1.0, n),
        ], axis=1)
        dt = float(rng.uniform(0.001, 0.5))
        bg.step(commands, dt)
        assert np.all(bg.phase >= 0.0)
        assert np.all(bg.phase < 1.0)


def test_full_period_returns_to_start(library):
    rng = np.random.default_rng(44)
    n = 10_000
    bg = BatchGenerator(library, n)
    speeds = rng.uniform(0.15, 2.0, n)
    commands = np.stack([speeds, np.zeros(n), np.zeros(n)], axis=1)
    theta_first, _, _, _ = bg.step(commands, 0.0)   # resolve mode and period
    assert not bg.standing.any()
    start_phase = bg.phase.copy()
    dt = bg.period / 100.0
    for _ in range(100):
        theta_d, _, _, _ = bg.step(commands, dt)
    assert np.all(circ_dist(bg.phase, start_phase) < 1e-6)
    assert np.max(np.abs(theta_d - theta_first)) < 1e-6


def test_continuity_across_template_boundaries(library):
    rng = np.random.default_rng(45)
    n = 10_000
    interior = np.asarray(library.speeds)[1:-1]
    speeds = rng.choice(interior, n)
    phases = rng.random(n)
    delta = 1e-9

    def pose_at(u):
        bg = BatchGenerator(library, n)
        bg.standing[:] = False
        bg.phase = phases.copy()
        commands = np.stack([u, np.zeros(n), np.zeros(n)], axis=1)
        theta_d, _, _, _ = bg.step(commands, 0.0)
        return theta_d, bg.period.copy()

    below, period_below = pose_at(speeds - delta)
    above, period_above = pose_at(speeds + delta)
    assert np.max(np.abs(below - above)) < 1e-5
    assert np.max(np.abs(period_below - period_above)) < 1e-5


# ------------------------------------------------------------- standing


def test_standing_outputs(library):
    state = GeneratorState(phase=0.3, standing=False)
    new_state, frame = step(library, state, GaitCommand(0.0, 0.0, 0.0), 0.02)
    assert new_state.standing
    assert np.array_equal(frame.theta_d, library.stand_pose)
    assert np.array_equal(frame.delta_theta_d, np.zeros(12))
    assert (frame.contact_left, frame.contact_right) == (1, 1)
    assert frame.phase == 0.3           # frozen, not reset


def test_standing_requires_both_thresholds(library):
    # planar speed below threshold but spinning in place: still walking
    state = GeneratorState(phase=0.3, standing=False)
    new_state, _ = step(library, state, GaitCommand(0.0, 0.0, 0.5), 0.02)
    assert not new_state.standing


def test_hysteresis_band(library):
    v = library.standing_threshold
    band = library.hysteresis
    inside = v + band / 2            # above threshold, inside the band

    standing = GeneratorState(standing=True)
    after, _ = step(library, standing, GaitCommand(inside, 0.0, 0.0), 0.02)
    assert after.standing            # needs > v + band to leave

    walking = GeneratorState(standing=False, phase=0.2)
    after, _ = step(library, walking, GaitCommand(inside, 0.0, 0.0), 0.02)
    assert not after.standing        # needs <= v to enter

    after, _ = step(library, standing,
                    GaitCommand(v + band + 1e-9, 0.0, 0.0), 0.02)
    assert not after.standing


def test_phase_resumes_after_standing(library):
    state = GeneratorState()
    walk = GaitCommand(1.0, 0.0, 0.0)
    stand = GaitCommand(0.0, 0.0, 0.0)
    for _ in range(7):
        state, _ = step(library, state, walk, 0.02)
    paused = state.phase
    for _ in range(5):
        state, _ = step(library, state, stand, 0.02)
    assert state.phase == paused
    state, _ = step(library, state, walk, 0.02)
    expected = advance_phase(paused, 0.02, state.period)
    assert state.phase == pytest.approx(expected, abs=1e-12)


def test_delta_matches_pose_difference(library):
    state = GeneratorState(phase=0.41, standing=False)
    cmd = GaitCommand(0.83, 0.0, 0.0)
    new_state, frame = step(library, state, cmd, 0.02)
    pose_new = blend_pose(library, new_state, cmd)
    pose_old = blend_pose(library, GeneratorState(phase=0.41, standing=False),
                          cmd)
    assert np.array_equal(frame.delta_theta_d, pose_new - pose_old)


def test_contact_indicators_wrapped_window(library):
    lower, upper, alpha = neighbor_select(library, float(library.speeds[0]))
    on, off = lower.stance_window["right"]
    assert off < on                   # the fixture's right window wraps
    inside = GeneratorState(phase=(on + 0.01) % 1.0, standing=False)
    outside = GeneratorState(phase=(off + 0.01) % 1.0, standing=False)
    assert contact_indicators(inside, lower, upper, alpha)[1] == 1
    assert contact_indicators(outside, lower, upper, alpha)[1] == 0


def test_contact_indicators_standing():
    state = GeneratorState(standing=True, phase=0.9)
    assert contact_indicators(state, None, None, 0.0) == (1, 1)


# ------------------------------------------------------ batch vs scalar


def test_batch_rows_match_scalar_bitwise(library):
    rng = np.random.default_rng(46)
    n = 16
    steps = 50
    commands = rng.uniform(-1.5, 1.5, size=(steps, n, 3))
    commands[:, :, 2] *= 0.5

    bg = BatchGenerator(library, n)
    scalar_states = [GeneratorState() for _ in range(n)]
    for s in range(steps):
        theta_d, delta_d, contacts, phase = bg.step(commands[s], 0.02)
        for i in range(n):
            scalar_states[i], frame = step(
                library, scalar_states[i],
                GaitCommand(*commands[s, i]), 0.02,
            )
            assert frame.phase == phase[i]
            assert np.array_equal(frame.theta_d, theta_d[i])
            assert np.array_equal(frame.delta_theta_d, delta_d[i])
            assert (frame.contact_left, frame.contact_right) == \
                tuple(contacts[i])


def test_batch_reset_single_agent(library):
    bg = BatchGenerator(library, 4)
    cmds = np.tile([1.0, 0.0, 0.0], (4, 1))
    for _ in range(5):
        bg.step(cmds, 0.02)
    bg.reset(agent=2)
    assert bg.phase[2] == 0.0
    assert bg.standing[2]
    assert bg.phase[0] != 0.0


def test_batch_command_shape_checked(library):
    bg = BatchGenerator(library, 4)
    with pytest.raises(ValueError, match=r"\(4, 3\)"):
        bg.step(np.zeros((3, 3)), 0.02)


def test_single_template_library_pins_to_it():
    lib = make_library(speeds=(0.9,))
    template = lib.templates[0]
    for speed in (0.4, 0.9, 2.4):
        state, frame = step(lib, GeneratorState(phase=0.25, standing=False),
                            GaitCommand(speed, 0.0, 0.0), 0.0)
        assert state.period == template.period
        want = kernels.pure.blend_pose_batch(
            template.theta_grid[None], np.array([0]), np.array([0]),
            np.array([0.0]), np.array([0.25]),
        )[0]
        assert np.array_equal(frame.theta_d, want)
