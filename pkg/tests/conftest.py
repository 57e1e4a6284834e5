"""Shared fixtures and the acceptance-summary report hook."""

import numpy as np
import pytest

from locokit.motion.clips import FootContactTrack, RawClip

# populated by pytest_runtest_logreport as acceptance tests finish
_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")


def make_walk_clip(name="walk", speed=0.8, amp=0.3, frames_per_cycle=100,
                   n_cycles=3, dt=0.01, stance=0.6, standing=False,
                   yaw_rate=0.0):
    """Synthetic periodic clip: sinusoidal joints, rectangular contact.

    Left foot stance covers phase [0, stance); right foot is offset by half
    a cycle.  One extra frame past the last cycle so the final touchdown
    lands inside the clip.
    """
    total = frames_per_cycle * n_cycles + 1
    phi = (np.arange(total) / frames_per_cycle) % 1.0
    scale = np.linspace(0.5, 1.5, 12)
    theta = amp * np.sin(2 * np.pi * phi)[:, None] * scale[None, :]
    if standing:
        theta = np.full((total, 12), 0.1)
    theta_dot = np.gradient(theta, dt, axis=0)
    contact = {}
    for foot, offset in (("left", 0.0), ("right", 0.5)):
        p = (phi + offset) % 1.0
        sigma = np.where(p < stance, 0.05, 0.0)
        if standing:
            sigma = np.full(total, 0.05)
        contact[foot] = FootContactTrack(mu=np.zeros((total, 2)), sigma=sigma)
    return RawClip(
        name=name,
        dt=dt,
        nominal_velocity=np.array([speed, 0.0, yaw_rate]),
        joint_names=None,
        theta=theta,
        theta_dot=theta_dot,
        base_lin_vel=np.tile([speed, 0.0, 0.0], (total, 1)),
        base_ang_vel=np.tile([0.0, 0.0, yaw_rate], (total, 1)),
        contact=contact,
    )


def make_library(speeds=(0.5, 1.0, 1.5), stand_pose=None, **kwargs):
    from locokit.gait.library import TemplateLibrary
    from locokit.motion.clips import detect_contacts, extract_cycle, segment_cycles
    from locokit.motion.templates import resample_phase

    templates = []
    for i, speed in enumerate(speeds):
        clip = make_walk_clip(name=f"walk_{i}", speed=speed,
                              amp=0.2 + 0.1 * i, stance=0.55 + 0.05 * i)
        spans = segment_cycles(detect_contacts(clip), "left")
        cycle = extract_cycle(clip, spans, 1)
        templates.append(resample_phase(cycle))
    if stand_pose is None:
        stand_pose = np.full(12, 0.1)
    return TemplateLibrary(templates, stand_pose=stand_pose, **kwargs)


@pytest.fixture
def walk_clip():
    return make_walk_clip()


@pytest.fixture
def library():
    return make_library()
