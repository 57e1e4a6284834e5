"""Landing-state reward terms.

Weights follow the reward table for landing components; the formulas
behind each description are this package's own, fixed here and
documented, with every threshold configurable:

    air      on touchdown, credit min(air_time, t_max) when the flight
             lasted at least t_min; rhythmic stepping earns the most
    slide    sum over planted feet of squared tangential (horizontal)
             foot speed, clamped
    dbl_air  indicator: both feet airborne while in walking mode
    swing    sum over airborne feet of squared lift-height shortfall
             clip(h_target - height, 0, h_target)^2
    stumble  indicator: horizontal contact force exceeds the configured
             ratio times the vertical force on any foot
    edge     per-foot indicator: planted foot center within the edge
             margin of a terrain discontinuity (a heightmap cell step
             above 5 cm); weighted separately for each foot
"""

import math
from dataclasses import dataclass

from locokit.robot import FEET


@dataclass
class LandingRewardResult:
    raw: dict        # term -> unweighted value
    weighted: dict   # term -> weight * value
    total: float


def landing_rewards(snapshot, config):
    """Evaluate all landing terms for one snapshot."""
    feet = [snapshot.feet[f] for f in FEET]

    air = 0.0
    for fs in feet:
        touched_down = fs.contact and fs.air_time > 0.0
        if touched_down and fs.air_time >= config.air_time_min:
            air += min(fs.air_time, config.air_time_max)

    slide = 0.0
    for fs in feet:
        if fs.contact:
            slide += float(fs.velocity[0]) ** 2 + float(fs.velocity[1]) ** 2
    slide = min(slide, config.slide_clamp)

    dbl_air = 1.0 if snapshot.walking and not any(fs.contact for fs in feet) else 0.0

    swing = 0.0
    for fs in feet:
        if not fs.contact:
            shortfall = config.swing_height_target - fs.height
            shortfall = min(max(shortfall, 0.0), config.swing_height_target)
            swing += shortfall * shortfall

    stumble = 0.0
    for fs in feet:
        horizontal = math.hypot(fs.force[0], fs.force[1])
        if horizontal > config.stumble_force_ratio * abs(fs.force[2]):
            stumble = 1.0
            break

    edge = {}
    for foot, fs in zip(FEET, feet):
        near = fs.contact and fs.edge_distance < config.edge_margin
        edge[foot] = 1.0 if near else 0.0

    raw = {
        "air": air,
        "slide": slide,
        "dbl_air": dbl_air,
        "swing": swing,
        "stumble": stumble,
        "edge_left": edge["left"],
        "edge_right": edge["right"],
    }
    weights = {
        "air": config.air_weight,
        "slide": config.slide_weight,
        "dbl_air": config.dbl_air_weight,
        "swing": config.swing_weight,
        "stumble": config.stumble_weight,
        "edge_left": config.edge_weight,
        "edge_right": config.edge_weight,
    }
    weighted = {name: weights[name] * raw[name] for name in raw}
    return LandingRewardResult(
        raw=raw, weighted=weighted, total=math.fsum(weighted.values())
    )
