"""Episode-level environment: reset/step lifecycle, reward, achievements.

Sub-step order is frozen: player action, creatures, vitals, spawn
balancing, daylight. Reward per step is (first-time unlocks) * 1.0 +
(net health change) * 0.1. The episode return is additionally tracked in
integer tenths so the achievement-ceiling identity is exact regardless of
float accumulation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import sim
from .config import BalanceConfig
from .defs import (
    ACHIEVEMENT_NAMES,
    EPISODE_LIMIT,
    ITEM_NAMES,
    MAX_VITAL,
    N_ACHIEVEMENTS,
    N_ACTIONS,
)
from .errors import SteppedAfterDone
from .render import TextureAtlas, default_atlas, render_observation, semantic_grid
from .rng import derive_episode_seed
from .state import WorldState
from .worldgen import generate_world


@dataclass
class StepResult:
    observation: np.ndarray
    reward: float
    done: bool
    info: dict

    def __iter__(self):
        # allows obs, reward, done, info = env.step(a)
        return iter((self.observation, self.reward, self.done, self.info))


@dataclass
class EpisodeSummary:
    episode_index: int
    length: int
    return_tenths: int
    achievements: dict[str, int] = field(default_factory=dict)

    @property
    def episode_return(self) -> float:
        return self.return_tenths / 10.0

    def distinct_achievements(self) -> int:
        return sum(1 for v in self.achievements.values() if v > 0)


class Env:
    """One environment instance; owns its WorldState, never shared."""

    observation_shape = (64, 64, 3)
    n_actions = N_ACTIONS

    def __init__(
        self,
        run_seed: int = 0,
        config: BalanceConfig | None = None,
        atlas: TextureAtlas | None = None,
    ):
        self.run_seed = int(run_seed)
        self.config = config or BalanceConfig()
        self.config.validate()
        self.atlas = atlas or default_atlas()
        self.state: WorldState | None = None
        self.episode_index = -1
        self.step_count = 0
        self.done = True
        self.achievements = np.zeros(N_ACHIEVEMENTS, dtype=np.int32)
        self.return_tenths = 0
        self._obs = np.zeros(self.observation_shape, dtype=np.uint8)

    # -- lifecycle ---------------------------------------------------------

    def reset(self, episode_index: int | None = None) -> np.ndarray:
        """Start a fresh episode; returns the initial observation."""
        if episode_index is None:
            episode_index = self.episode_index + 1
        self.episode_index = int(episode_index)
        seed = derive_episode_seed(self.run_seed, self.episode_index)
        self.state = generate_world(seed, self.config)
        self.step_count = 0
        self.done = False
        self.achievements[:] = 0
        self.return_tenths = 0
        self._obs = render_observation(self.state, self.config, self.atlas)
        return self._obs.copy()

    def step(self, action: int) -> StepResult:
        if self.state is None:
            raise SteppedAfterDone("reset() must be called before step()")
        if self.done:
            raise SteppedAfterDone("episode is over; call reset()")
        state, cfg = self.state, self.config
        night_start = cfg.day_length - cfg.night_length

        events, delta_action = sim.apply_action(state, action, cfg)
        delta_creatures = sim.tick_entities(state, cfg)
        vital_events, delta_vitals = sim.tick_vitals(state, cfg, night_start)
        events.extend(vital_events)
        sim.balance_spawns(state, cfg, state.is_night(night_start))
        sim.advance_daylight(state, cfg)

        newly_unlocked = 0
        for ach in events:
            if self.achievements[ach] == 0:
                newly_unlocked += 1
            self.achievements[ach] += 1
        health_delta = delta_action + delta_creatures + delta_vitals
        reward = compute_step_reward(newly_unlocked, health_delta)
        self.return_tenths += 10 * newly_unlocked + health_delta

        self.step_count += 1
        died = state.health <= 0
        truncated = self.step_count >= EPISODE_LIMIT
        self.done = died or truncated

        self._obs = render_observation(state, cfg, self.atlas, out=self._obs)
        info = self._info(died)
        return StepResult(self._obs.copy(), reward, self.done, info)

    def render(self) -> np.ndarray:
        """The most recent observation (no re-render: replay safety)."""
        return self._obs.copy()

    # -- reporting ---------------------------------------------------------

    def _info(self, died: bool) -> dict:
        state = self.state
        return {
            "inventory": {
                name: int(state.inventory[i]) for i, name in enumerate(ITEM_NAMES)
            },
            "vitals": {
                "health": state.health,
                "food": state.food,
                "water": state.water,
                "energy": state.energy,
            },
            "achievements": {
                name: int(self.achievements[i])
                for i, name in enumerate(ACHIEVEMENT_NAMES)
            },
            "player_pos": (state.player_x, state.player_y),
            "facing": state.facing,
            "sleeping": state.sleeping,
            "semantic": semantic_grid(state),
            "discount": 0.0 if died else 1.0,
            "step": self.step_count,
            "daylight": state.daylight(self.config.day_length),
        }

    def summary(self) -> EpisodeSummary:
        return EpisodeSummary(
            episode_index=self.episode_index,
            length=self.step_count,
            return_tenths=self.return_tenths,
            achievements={
                name: int(self.achievements[i])
                for i, name in enumerate(ACHIEVEMENT_NAMES)
            },
        )

    @property
    def episode_return(self) -> float:
        return self.return_tenths / 10.0

    def close(self) -> None:
        self.state = None
        self.done = True


def compute_step_reward(newly_unlocked: int, health_delta: int) -> float:
    """+1 per first-time unlock this episode, +-0.1 per health point."""
    if not 0 <= newly_unlocked:
        raise ValueError("newly_unlocked must be non-negative")
    if not -MAX_VITAL <= health_delta <= MAX_VITAL:
        raise ValueError("health_delta outside [-9, 9]")
    return newly_unlocked * 1.0 + health_delta * 0.1
