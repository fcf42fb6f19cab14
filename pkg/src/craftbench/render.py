"""Observation rasterizer.

Frozen pixel layout of the 64x64 observation:

  rows  0..48  local world view: 9x7 cells at 7 px/cell (63x49), player
               centered at view cell (4, 3); cells off the map are black
  rows 49..55  HUD row A: vitals (health, food, water, energy), then the
               first five item slots (sapling, wood, stone, coal, iron)
  rows 56..62  HUD row B: diamond and the six tools
  row  63 / col 63  unused (background)

Item slots render only when the count is nonzero; counts display capped
at 9. At night, in-map cells beyond Chebyshev distance 2 from the player
are darkened (x0.4) and speckled (p=0.05/pixel) from the view-noise
stream; while sleeping the whole view is dimmed to 0.25 instead.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .config import BalanceConfig
from .defs import ITEM_NAMES, WORLD_SIZE, EntityKind, Material
from .state import WorldState
from .textures import build_atlas, digit_glyphs, downscale7

OBS_SHAPE = (64, 64, 3)

_MATERIAL_SPRITES = (
    "water",
    "sand",
    "grass",
    "tree",
    "path",
    "stone",
    "coal",
    "iron",
    "diamond",
    "lava",
    "table",
    "furnace",
    "plant_material",
)

# Entity tile order consumed by the kernels: player WENS, cow, zombie,
# skeleton, arrow WENS, plant, ripe plant.
_ENTITY_SPRITES = (
    "player_west",
    "player_east",
    "player_north",
    "player_south",
    "cow",
    "zombie",
    "skeleton",
    "arrow_west",
    "arrow_east",
    "arrow_north",
    "arrow_south",
    "plant",
    "plant_ripe",
)

_ICON_SPRITES = ("icon_health", "icon_food", "icon_water", "icon_energy") + tuple(
    f"icon_{name}" for name in ITEM_NAMES
)


class TextureAtlas:
    """Kernel-ready tile tables derived from the embedded sprites."""

    def __init__(self):
        atlas = build_atlas()
        self.sprites = atlas
        self.mat_tiles = np.stack(
            [downscale7(atlas[name]) for name in _MATERIAL_SPRITES]
        )
        self.ent_tiles = np.stack([downscale7(atlas[name]) for name in _ENTITY_SPRITES])
        self.icon_tiles = np.stack([downscale7(atlas[name]) for name in _ICON_SPRITES])
        self.digits = digit_glyphs()
        self.mat_tiles_full = np.stack([atlas[name] for name in _MATERIAL_SPRITES])
        for arr in (
            self.mat_tiles,
            self.ent_tiles,
            self.icon_tiles,
            self.digits,
            self.mat_tiles_full,
        ):
            arr.setflags(write=False)


_DEFAULT_ATLAS: TextureAtlas | None = None


def default_atlas() -> TextureAtlas:
    global _DEFAULT_ATLAS
    if _DEFAULT_ATLAS is None:
        _DEFAULT_ATLAS = TextureAtlas()
    return _DEFAULT_ATLAS


def render_observation(
    state: WorldState,
    cfg: BalanceConfig,
    atlas: TextureAtlas | None = None,
    out: np.ndarray | None = None,
) -> np.ndarray:
    """Rasterize the agent observation for the current state.

    Consumes the view-noise stream only for the night speckle overlay;
    callers that need replay determinism must render exactly once per step
    (the environment does).
    """
    atlas = atlas or default_atlas()
    if out is None:
        out = np.empty(OBS_SHAPE, dtype=np.uint8)
    night = state.is_night(cfg.day_length - cfg.night_length)
    vitals = np.array(
        [state.health, state.food, state.water, state.energy], dtype=np.int32
    )
    _kernels.active().render_observation(
        out,
        state.grid,
        state.ent_kind,
        state.ent_x,
        state.ent_y,
        state.ent_aux,
        state.ent_dir,
        state.ent_alive,
        state.player_x,
        state.player_y,
        state.facing,
        1 if state.sleeping else 0,
        1 if night else 0,
        state.inventory,
        vitals,
        state.rng_states,
        atlas.mat_tiles,
        atlas.ent_tiles,
        atlas.icon_tiles,
        atlas.digits,
        cfg.plant_ripen_ticks,
    )
    return out


def render_full_map(
    grid: np.ndarray, atlas: TextureAtlas | None = None, state: WorldState | None = None
) -> np.ndarray:
    """Debug render of the whole map at 16 px/cell (1024x1024x3).

    Pass the state to overlay entities on their cells.
    """
    atlas = atlas or default_atlas()
    size = WORLD_SIZE
    image = atlas.mat_tiles_full[grid].transpose(0, 2, 1, 3, 4)
    image = image.reshape(size * 16, size * 16, 3).copy()
    if state is not None:
        _overlay_entities(image, state, atlas)
    return image


def _overlay_entities(image: np.ndarray, state: WorldState, atlas: TextureAtlas) -> None:
    sprites = atlas.sprites

    def blit(name: str, x: int, y: int) -> None:
        tile = sprites[name]
        mask = ~(
            (tile[:, :, 0] == 255) & (tile[:, :, 1] == 0) & (tile[:, :, 2] == 255)
        )
        region = image[y * 16 : y * 16 + 16, x * 16 : x * 16 + 16]
        region[mask] = tile[mask]

    kind_names = {
        EntityKind.COW: "cow",
        EntityKind.ZOMBIE: "zombie",
        EntityKind.SKELETON: "skeleton",
    }
    for i in range(state.ent_alive.shape[0]):
        if not state.ent_alive[i]:
            continue
        kind = EntityKind(state.ent_kind[i])
        if kind in kind_names:
            blit(kind_names[kind], int(state.ent_x[i]), int(state.ent_y[i]))
    facing_names = ("player_west", "player_east", "player_north", "player_south")
    blit(facing_names[state.facing], state.player_x, state.player_y)


def semantic_grid(state: WorldState) -> np.ndarray:
    """The privileged material map (a copy of the authoritative grid)."""
    return state.grid.copy()


MATERIAL_LEGEND = {int(m): m.name.lower() for m in Material}
