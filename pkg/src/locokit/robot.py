"""Joint layout shared across the toolkit.

Twelve actuated leg joints, left leg first, hips proximal to distal.
Every (12,) vector in the package follows this ordering.
"""

JOINT_NAMES = (
    "left_hip_yaw",
    "left_hip_roll",
    "left_hip_pitch",
    "left_knee_pitch",
    "left_ankle_pitch",
    "left_ankle_roll",
    "right_hip_yaw",
    "right_hip_roll",
    "right_hip_pitch",
    "right_knee_pitch",
    "right_ankle_pitch",
    "right_ankle_roll",
)

NUM_JOINTS = len(JOINT_NAMES)

# ankle pitch joints, used by the ankle posture reward term
DEFAULT_ANKLE_INDICES = (4, 10)

FEET = ("left", "right")
