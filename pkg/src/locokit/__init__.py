"""Toolkit for template-based legged locomotion training stacks.

Subpackages:
    motion      motion-clip ingestion, contact segmentation, phase resampling
    gait        template libraries and the velocity-conditioned gait generator
    rewards     observation assembly, PD control, gait and landing rewards
    perception  depth-camera resolution analysis, depth image IO, randomization
    kernels     hot numeric kernels (compiled backend with pure fallback)

Top-level modules:
    curriculum  terrain difficulty progression
    buffering   tiered per-environment frame buffers and capacity planning
    cli         command-line entry point
"""

__version__ = "0.1.0"
