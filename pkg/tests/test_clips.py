"""Clip loading, validation, contact detection, and cycle segmentation."""

import json

import numpy as np
import pytest

from conftest import make_walk_clip
from locokit.motion.clips import (
    ClipFormatError,
    FootContactTrack,
    InsufficientCyclesError,
    RawClip,
    detect_contacts,
    extract_cycle,
    load_raw_clip,
    save_raw_clip,
    segment_cycles,
)


def edges_oracle(states):
    """Brute-force rising/falling edge enumeration; frame 0 is never an edge."""
    rising, falling = [], []
    for i in range(1, len(states)):
        if states[i] and not states[i - 1]:
            rising.append(i)
        if states[i - 1] and not states[i]:
            falling.append(i)
    return rising, falling


def test_round_trip(tmp_path, walk_clip):
    path = tmp_path / "clip.json"
    save_raw_clip(walk_clip, str(path))
    back = load_raw_clip(str(path))
    assert back.name == walk_clip.name
    assert back.dt == walk_clip.dt
    assert np.array_equal(back.theta, walk_clip.theta)
    assert np.array_equal(back.contact["left"].sigma,
                          walk_clip.contact["left"].sigma)
    assert back.joint_names == walk_clip.joint_names


def test_load_rejects_wrong_schema(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema": "something-else/9"}))
    with pytest.raises(ClipFormatError, match="schema"):
        load_raw_clip(str(path))


def test_validation_errors(walk_clip):
    with pytest.raises(ClipFormatError, match="dt must be positive"):
        RawClip(name="x", dt=0.0, nominal_velocity=walk_clip.nominal_velocity,
                joint_names=None, theta=walk_clip.theta,
                theta_dot=walk_clip.theta_dot,
                base_lin_vel=walk_clip.base_lin_vel,
                base_ang_vel=walk_clip.base_ang_vel,
                contact=walk_clip.contact)
    with pytest.raises(ClipFormatError, match="expected 12 joints"):
        RawClip(name="x", dt=0.01, nominal_velocity=walk_clip.nominal_velocity,
                joint_names=None, theta=walk_clip.theta[:, :7],
                theta_dot=walk_clip.theta_dot[:, :7],
                base_lin_vel=walk_clip.base_lin_vel,
                base_ang_vel=walk_clip.base_ang_vel,
                contact=walk_clip.contact)
    with pytest.raises(ClipFormatError, match="frame count mismatch: theta_dot"):
        RawClip(name="x", dt=0.01, nominal_velocity=walk_clip.nominal_velocity,
                joint_names=None, theta=walk_clip.theta,
                theta_dot=walk_clip.theta_dot[:-1],
                base_lin_vel=walk_clip.base_lin_vel,
                base_ang_vel=walk_clip.base_ang_vel,
                contact=walk_clip.contact)


def test_contact_track_mismatch(walk_clip):
    short = {
        "left": FootContactTrack(
            mu=walk_clip.contact["left"].mu[:-1],
            sigma=walk_clip.contact["left"].sigma[:-1],
        ),
        "right": walk_clip.contact["right"],
    }
    with pytest.raises(ClipFormatError, match="frame count mismatch: contact"):
        RawClip(name="x", dt=0.01, nominal_velocity=walk_clip.nominal_velocity,
                joint_names=None, theta=walk_clip.theta,
                theta_dot=walk_clip.theta_dot,
                base_lin_vel=walk_clip.base_lin_vel,
                base_ang_vel=walk_clip.base_ang_vel, contact=short)


def test_nonfinite_rejected(walk_clip):
    theta = walk_clip.theta.copy()
    theta[3, 5] = np.nan
    with pytest.raises(ClipFormatError, match="finite"):
        RawClip(name="x", dt=0.01, nominal_velocity=walk_clip.nominal_velocity,
                joint_names=None, theta=theta, theta_dot=walk_clip.theta_dot,
                base_lin_vel=walk_clip.base_lin_vel,
                base_ang_vel=walk_clip.base_ang_vel,
                contact=walk_clip.contact)


def test_detect_contacts_threshold(walk_clip):
    timeline = detect_contacts(walk_clip, threshold=0.01)
    sigma = walk_clip.contact["left"].sigma
    assert np.array_equal(timeline.contact["left"], sigma >= 0.01)
    # exactly at threshold counts as contact
    track = FootContactTrack(mu=np.zeros((4, 2)),
                             sigma=np.array([0.0, 0.01, 0.009999, 0.02]))
    clip = make_walk_clip(frames_per_cycle=2, n_cycles=1, dt=0.1)
    clip.contact["left"] = FootContactTrack(mu=np.zeros((3, 2)),
                                            sigma=np.array([0.0, 0.01, 0.0]))
    tl = detect_contacts(clip)
    assert list(tl.contact["left"]) == [False, True, False]
    assert list(tl.touchdowns["left"]) == [1]
    assert list(tl.liftoffs["left"]) == [2]
    del track


def test_edges_match_oracle_on_random_patterns():
    rng = np.random.default_rng(21)
    for trial in range(100):
        frames = int(rng.integers(4, 60))
        states = rng.random(frames) < 0.5
        sigma = np.where(states, 0.05, 0.0)
        clip = _pattern_clip(sigma)
        timeline = detect_contacts(clip)
        rising, falling = edges_oracle(states)
        assert list(timeline.touchdowns["left"]) == rising
        assert list(timeline.liftoffs["left"]) == falling
        # spans pair consecutive touchdowns
        if len(rising) >= 2:
            spans = segment_cycles(timeline, "left")
            assert spans == list(zip(rising[:-1], rising[1:]))
        else:
            with pytest.raises(InsufficientCyclesError,
                               match="insufficient cycles"):
                segment_cycles(timeline, "left")


def _pattern_clip(sigma):
    frames = len(sigma)
    return RawClip(
        name="pattern", dt=0.01, nominal_velocity=np.array([0.5, 0.0, 0.0]),
        joint_names=None, theta=np.zeros((frames, 12)),
        theta_dot=np.zeros((frames, 12)), base_lin_vel=np.zeros((frames, 3)),
        base_ang_vel=np.zeros((frames, 3)),
        contact={
            "left": FootContactTrack(mu=np.zeros((frames, 2)), sigma=sigma),
            "right": FootContactTrack(mu=np.zeros((frames, 2)),
                                      sigma=np.where(sigma > 0, 0.0, 0.05)),
        },
    )


def test_frame_zero_never_an_edge():
    sigma = np.array([0.05, 0.05, 0.0, 0.05, 0.05])
    clip = _pattern_clip(sigma)
    timeline = detect_contacts(clip)
    assert 0 not in timeline.touchdowns["left"]
    assert list(timeline.touchdowns["left"]) == [3]
    assert list(timeline.liftoffs["left"]) == [2]


def test_extract_cycle_indexing(walk_clip):
    timeline = detect_contacts(walk_clip)
    spans = segment_cycles(timeline, "left")
    assert len(spans) == 2
    cycle = extract_cycle(walk_clip, spans, 1)
    start, end = spans[1]
    assert cycle.span == (start, end)
    assert cycle.theta.shape == (end - start, 12)
    assert np.array_equal(cycle.theta, walk_clip.theta[start:end])
    assert cycle.period == pytest.approx((end - start) * walk_clip.dt)
    with pytest.raises(ValueError, match="out of range"):
        extract_cycle(walk_clip, spans, 2)


def test_cycle_carries_contact(walk_clip):
    spans = segment_cycles(detect_contacts(walk_clip), "left")
    cycle = extract_cycle(walk_clip, spans, 0)
    start, end = spans[0]
    assert np.array_equal(cycle.contact["right"].sigma,
                          walk_clip.contact["right"].sigma[start:end])
