"""Procedural world generation.

Layered synthesis: low-frequency noise fields partition the map into
lakes, grasslands, and mountains; mountains carve caves and host ores and
lava; grasslands host forests. Object placement inside each region is
uniform per cell. The whole map is a pure function of the episode seed
and the balance config, and is regenerated (bounded retries) until every
resource needed by the full achievement set is present and reachable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .config import BalanceConfig
from .defs import WALKABLE, WORLD_SIZE, EntityKind, Material
from .errors import RetryExhausted
from .noise import NoiseField
from .rng import GOLDEN, MASK64, Rng, STREAM_WORLDGEN, mix64, stream_seed
from .state import WorldState

REQUIRED_MATERIALS = (
    Material.WATER,
    Material.TREE,
    Material.STONE,
    Material.COAL,
    Material.IRON,
    Material.DIAMOND,
)

# Materials an agent can eventually pass through given the full tool chain.
_MINEABLE = {Material.TREE, Material.STONE, Material.COAL, Material.IRON, Material.DIAMOND}

_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


@dataclass
class GeneratedWorld:
    grid: np.ndarray
    cave_mask: np.ndarray
    spawn_point: tuple[int, int]


def generate_world(episode_seed: int, config: BalanceConfig) -> WorldState:
    """Build the initial WorldState for an episode.

    Raises RetryExhausted when the config cannot produce a valid map within
    its retry budget (a degenerate balance table, not a seed problem).
    """
    base = stream_seed(episode_seed, STREAM_WORLDGEN)
    for attempt in range(config.worldgen_max_retries):
        attempt_seed = mix64((base + attempt * GOLDEN) & MASK64)
        world = _attempt(attempt_seed, config)
        if world is not None:
            state = WorldState.fresh(
                episode_seed, world.grid, world.cave_mask, world.spawn_point
            )
            creature_rng = Rng(mix64((attempt_seed ^ 0xA5A5A5A5A5A5A5A5) & MASK64))
            _place_creatures(state, creature_rng, config)
            return state
    raise RetryExhausted(
        f"no valid world in {config.worldgen_max_retries} attempts; "
        "check the worldgen thresholds in the balance config"
    )


def _attempt(seed: int, cfg: BalanceConfig) -> GeneratedWorld | None:
    size = WORLD_SIZE
    elevation = NoiseField(
        mix64(seed ^ 0x1111111111111111), cfg.elevation_scale, cfg.elevation_octaves
    ).grid(size)
    forest = NoiseField(mix64(seed ^ 0x2222222222222222), cfg.forest_scale, 2).grid(size)
    caves = NoiseField(mix64(seed ^ 0x3333333333333333), cfg.cave_scale, 1).grid(size)

    object_rng = Rng(mix64(seed ^ 0x4444444444444444))
    draws = object_rng.draw(size * size).reshape(size, size)
    u = (draws >> np.uint64(11)).astype(np.float64) * (2.0**-53)

    grid = np.full((size, size), Material.GRASS, dtype=np.uint8)
    grid[elevation < cfg.water_threshold] = Material.WATER
    shore = (elevation >= cfg.water_threshold) & (elevation < cfg.sand_threshold)
    grid[shore] = Material.SAND

    mountain = elevation > cfg.mountain_threshold
    grid[mountain] = Material.STONE
    cave = mountain & (caves > cfg.cave_threshold)
    grid[cave] = Material.PATH

    rocky = mountain & ~cave
    band = 0.0
    grid[rocky & (u < cfg.coal_prob)] = Material.COAL
    band += cfg.coal_prob
    grid[rocky & (u >= band) & (u < band + cfg.iron_prob)] = Material.IRON
    band += cfg.iron_prob
    deep = elevation > cfg.diamond_min_elevation
    grid[rocky & deep & (u >= band) & (u < band + cfg.diamond_prob)] = Material.DIAMOND
    band += cfg.diamond_prob
    hot = elevation > cfg.lava_min_elevation
    grid[rocky & hot & (u >= band) & (u < band + cfg.lava_prob)] = Material.LAVA

    grassy = (grid == Material.GRASS) & (forest > cfg.forest_threshold)
    grid[grassy & (u < cfg.tree_prob)] = Material.TREE

    # One-cell border ring: immutable water barrier.
    grid[0, :] = Material.WATER
    grid[-1, :] = Material.WATER
    grid[:, 0] = Material.WATER
    grid[:, -1] = Material.WATER

    for mat in REQUIRED_MATERIALS:
        if not (grid == mat).any():
            return None

    cave_mask = cave.astype(np.uint8)
    cave_mask[0, :] = 0
    cave_mask[-1, :] = 0
    cave_mask[:, 0] = 0
    cave_mask[:, -1] = 0
    # Skeleton habitat (and thus the full achievement set) needs real caves.
    if int(cave_mask.sum()) < 4:
        return None

    spawn = _pick_spawn(grid, cfg)
    if spawn is None:
        return None
    if not _diamond_reachable(grid, spawn):
        return None
    return GeneratedWorld(grid=grid, cave_mask=cave_mask, spawn_point=spawn)


def _window_counts(mask: np.ndarray, radius: int) -> np.ndarray:
    """Number of set cells within a (2r+1)^2 box around each cell."""
    size = mask.shape[0]
    padded = np.zeros((size + 1, size + 1), dtype=np.int32)
    padded[1:, 1:] = np.cumsum(np.cumsum(mask.astype(np.int32), axis=0), axis=1)
    idx = np.arange(size)
    lo = np.clip(idx - radius, 0, size)
    hi = np.clip(idx + radius + 1, 0, size)
    return (
        padded[np.ix_(hi, hi)]
        - padded[np.ix_(lo, hi)]
        - padded[np.ix_(hi, lo)]
        + padded[np.ix_(lo, lo)]
    )


def _pick_spawn(grid: np.ndarray, cfg: BalanceConfig) -> tuple[int, int] | None:
    """Walkable cell nearest the map center, preferring open grassland.

    'Open' means no exposed stone-like cell within the clearance radius,
    which keeps fresh players out of mountain pockets.
    """
    size = WORLD_SIZE
    center = size // 2
    stone_like = np.isin(
        grid,
        (Material.STONE, Material.COAL, Material.IRON, Material.DIAMOND, Material.LAVA),
    )
    near_stone = _window_counts(stone_like, cfg.spawn_clearance_radius) > 0

    priority = np.full((size, size), 3, dtype=np.int64)
    priority[grid == Material.GRASS] = 1
    priority[(grid == Material.GRASS) & ~near_stone] = 0
    for m in (Material.SAND, Material.PATH):
        priority[grid == m] = 2
    priority[0, :] = priority[-1, :] = 3
    priority[:, 0] = priority[:, -1] = 3
    if (priority == 3).all():
        return None

    ys, xs = np.mgrid[0:size, 0:size]
    dist2 = (xs - center) ** 2 + (ys - center) ** 2
    key = priority * (1 << 40) + dist2 * (size * size) + ys * size + xs
    key[priority == 3] = np.iinfo(np.int64).max
    flat = int(np.argmin(key))
    return (flat % size, flat // size)


def _diamond_reachable(grid: np.ndarray, spawn: tuple[int, int]) -> bool:
    """Connectivity from spawn over walkable-or-mineable cells to a diamond."""
    passable = np.zeros_like(grid, dtype=bool)
    for m in WALKABLE | _MINEABLE:
        passable |= grid == m
    labels, _ = ndimage.label(passable, structure=_CROSS)
    sx, sy = spawn
    home = labels[sy, sx]
    if home == 0:
        return False
    return bool(((grid == Material.DIAMOND) & (labels == home)).any())


def _place_creatures(state: WorldState, rng: Rng, cfg: BalanceConfig) -> None:
    """Initial cows and zombies on grass, skeletons in caves; uniform in-region."""
    grid = state.grid
    sx, sy = state.spawn_point
    ys, xs = np.mgrid[0:WORLD_SIZE, 0:WORLD_SIZE]
    spawn_dist = np.maximum(np.abs(xs - sx), np.abs(ys - sy))

    def place(kind: EntityKind, count: int, health: int, candidates: np.ndarray) -> None:
        flat = np.flatnonzero(candidates)
        for _ in range(count * 8):
            if count <= 0 or flat.size == 0:
                return
            cell = int(flat[rng.next_below(flat.size)])
            x, y = cell % WORLD_SIZE, cell // WORLD_SIZE
            if (x, y) == (sx, sy) or state.occupancy[y, x] >= 0:
                continue
            state.spawn_entity(kind, x, y, health)
            count -= 1

    grass = grid == Material.GRASS
    place(EntityKind.COW, cfg.init_cows, cfg.cow_health, grass)
    place(
        EntityKind.ZOMBIE,
        cfg.init_zombies,
        cfg.zombie_health,
        grass & (spawn_dist >= cfg.zombie_spawn_min_dist),
    )
    place(
        EntityKind.SKELETON,
        cfg.init_skeletons,
        cfg.skeleton_health,
        (grid == Material.PATH) & (state.cave_mask == 1),
    )
