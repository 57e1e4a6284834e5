"""Reward terms, PD mapping, observation assembly, estimator loss."""

from locokit.rewards.landing import LandingRewardResult, landing_rewards
from locokit.rewards.observations import (
    ACTOR_OBS_DIM,
    ESTIMATOR_DIM,
    PROPRIO_DIM,
    ActorObsView,
    EstimatorOutputLayout,
    assemble_actor_obs,
    assemble_critic_obs,
    assemble_proprio,
    critic_obs_dim,
    estimator_loss,
    slice_actor_obs,
)
from locokit.rewards.tracking import (
    DEFAULT_KD,
    DEFAULT_KP,
    GAIT_TERM_NAMES,
    GaitRewardResult,
    command_velocity,
    gait_reward,
    gait_reward_batch,
    pd_torque,
    target_joints,
    total_reward,
)
from locokit.rewards.types import FootState, RewardConfig, StepSnapshot

__all__ = [
    "ACTOR_OBS_DIM",
    "DEFAULT_KD",
    "DEFAULT_KP",
    "ESTIMATOR_DIM",
    "GAIT_TERM_NAMES",
    "PROPRIO_DIM",
    "ActorObsView",
    "EstimatorOutputLayout",
    "FootState",
    "GaitRewardResult",
    "LandingRewardResult",
    "RewardConfig",
    "StepSnapshot",
    "assemble_actor_obs",
    "assemble_critic_obs",
    "assemble_proprio",
    "command_velocity",
    "critic_obs_dim",
    "estimator_loss",
    "gait_reward",
    "gait_reward_batch",
    "landing_rewards",
    "pd_torque",
    "slice_actor_obs",
    "target_joints",
    "total_reward",
]
