"""craftbench: a deterministic open-world survival benchmark.

Procedurally generated 64x64 tile worlds, a survival/crafting simulation
with 22 per-episode achievements, 64x64x3 pixel observations, and an
evaluation harness with a geometric-mean score. Hot kernels run through a
compiled extension when built, with a bit-identical pure-Python fallback.
"""

from .config import BalanceConfig
from .defs import (
    ACHIEVEMENT_NAMES,
    ACTION_NAMES,
    N_ACHIEVEMENTS,
    N_ACTIONS,
    Achievement,
    Action,
    Material,
)
from .env import Env, StepResult, compute_step_reward
from .errors import (
    CraftbenchError,
    EmptyInput,
    EmptyLog,
    InvalidActionIndex,
    IoFailure,
    RateOutOfRange,
    RetryExhausted,
    SteppedAfterDone,
)
from .rng import derive_episode_seed

__version__ = "0.1.0"

__all__ = [
    "ACHIEVEMENT_NAMES",
    "ACTION_NAMES",
    "Achievement",
    "Action",
    "BalanceConfig",
    "CraftbenchError",
    "EmptyInput",
    "EmptyLog",
    "Env",
    "InvalidActionIndex",
    "IoFailure",
    "Material",
    "N_ACHIEVEMENTS",
    "N_ACTIONS",
    "RateOutOfRange",
    "RetryExhausted",
    "StepResult",
    "SteppedAfterDone",
    "compute_step_reward",
    "derive_episode_seed",
    "__version__",
]
