"""Mutable episode state: the material grid, entities, player, clocks.

Entity storage is a fixed-capacity struct-of-arrays so the native kernels
and the pure-Python fallback operate on the exact same memory. One
WorldState belongs to one environment instance; nothing here is shared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .defs import MAX_VITAL, WORLD_SIZE, EntityKind, FACING_SOUTH
from .rng import (
    GOLDEN,
    MASK64,
    STREAM_CREATURES,
    STREAM_PLAYER,
    STREAM_SPAWNING,
    STREAM_VIEWNOISE,
    mix64,
    stream_seed,
)

ENTITY_CAP = 128

# rng_states slots (must match _kernels order).
RNG_CREATURES, RNG_SPAWNING, RNG_VIEWNOISE, RNG_PLAYER = range(4)


@dataclass
class WorldState:
    grid: np.ndarray  # uint8 [64, 64] materials
    cave_mask: np.ndarray  # uint8 [64, 64] worldgen cave cells
    spawn_point: tuple[int, int]
    rng_states: np.ndarray  # uint64 [4]

    # entity struct-of-arrays
    ent_kind: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.uint8)
    )
    ent_x: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.int16)
    )
    ent_y: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.int16)
    )
    ent_health: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.int16)
    )
    ent_aux: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.int16)
    )
    ent_dir: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.int8)
    )
    ent_alive: np.ndarray = field(
        default_factory=lambda: np.zeros(ENTITY_CAP, dtype=np.uint8)
    )
    kind_counts: np.ndarray = field(default_factory=lambda: np.zeros(8, dtype=np.int32))
    occupancy: np.ndarray = field(
        default_factory=lambda: np.full((WORLD_SIZE, WORLD_SIZE), -1, dtype=np.int16)
    )

    # player
    player_x: int = 0
    player_y: int = 0
    facing: int = FACING_SOUTH
    health: int = MAX_VITAL
    food: int = MAX_VITAL
    water: int = MAX_VITAL
    energy: int = MAX_VITAL
    sleeping: bool = False
    inventory: np.ndarray = field(default_factory=lambda: np.zeros(12, dtype=np.int32))

    # clocks
    food_clock: int = 0
    water_clock: int = 0
    energy_clock: int = 0
    starve_clock: int = 0
    regen_clock: int = 0
    sleep_clock: int = 0
    tick_in_day: int = 0

    @classmethod
    def fresh(cls, episode_seed: int, grid, cave_mask, spawn_point) -> "WorldState":
        rng_states = np.array(
            [
                stream_seed(episode_seed, STREAM_CREATURES),
                stream_seed(episode_seed, STREAM_SPAWNING),
                stream_seed(episode_seed, STREAM_VIEWNOISE),
                stream_seed(episode_seed, STREAM_PLAYER),
            ],
            dtype=np.uint64,
        )
        state = cls(
            grid=grid,
            cave_mask=cave_mask,
            spawn_point=spawn_point,
            rng_states=rng_states,
        )
        state.player_x, state.player_y = spawn_point
        return state

    def spawn_entity(self, kind: EntityKind, x: int, y: int, health: int) -> int:
        """Place an entity in the first free slot; -1 when the table is full."""
        free = np.flatnonzero(self.ent_alive == 0)
        if free.size == 0:
            return -1
        i = int(free[0])
        self.ent_kind[i] = kind
        self.ent_x[i] = x
        self.ent_y[i] = y
        self.ent_health[i] = health
        self.ent_aux[i] = 0
        self.ent_dir[i] = 0
        self.ent_alive[i] = 1
        self.kind_counts[kind] += 1
        if kind != EntityKind.ARROW:
            self.occupancy[y, x] = i
        return i

    def kill_entity(self, i: int) -> None:
        self.ent_alive[i] = 0
        kind = self.ent_kind[i]
        self.kind_counts[kind] -= 1
        if kind != EntityKind.ARROW:
            self.occupancy[self.ent_y[i], self.ent_x[i]] = -1

    def entity_at(self, x: int, y: int) -> int:
        """Slot index of the non-arrow entity on (x, y), or -1."""
        return int(self.occupancy[y, x])

    def rng_next(self, stream: int) -> int:
        s = (int(self.rng_states[stream]) + GOLDEN) & MASK64
        self.rng_states[stream] = s
        return mix64(s)

    def rng_float(self, stream: int) -> float:
        return (self.rng_next(stream) >> 11) * (2.0**-53)

    def is_night(self, night_start: int) -> bool:
        return self.tick_in_day >= night_start

    def daylight(self, day_length: int) -> float:
        """Day phase in [0, 1)."""
        return self.tick_in_day / day_length
