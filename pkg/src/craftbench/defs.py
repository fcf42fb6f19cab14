"""Domain vocabulary: materials, entity kinds, actions, achievements.

All enums are small integers so they can live in uint8 numpy grids and be
shared verbatim with the native kernels.
"""

from __future__ import annotations

from enum import IntEnum


class Material(IntEnum):
    WATER = 0
    SAND = 1
    GRASS = 2
    TREE = 3
    PATH = 4
    STONE = 5
    COAL = 6
    IRON = 7
    DIAMOND = 8
    LAVA = 9
    TABLE = 10
    FURNACE = 11
    PLANT = 12


MATERIAL_NAMES = tuple(m.name.lower() for m in Material)

# Cells a creature may stand on or walk onto.
WALKABLE = frozenset({Material.GRASS, Material.SAND, Material.PATH})
# The player may additionally step into lava (and dies on contact).
PLAYER_WALKABLE = WALKABLE | {Material.LAVA}
# Cells an arrow can fly over; anything else stops it.
ARROW_PASSABLE = WALKABLE
# Cells that never appear in a freshly generated world.
PLACED_ONLY = frozenset({Material.TABLE, Material.FURNACE, Material.PLANT})


class EntityKind(IntEnum):
    PLAYER = 0
    COW = 1
    ZOMBIE = 2
    SKELETON = 3
    ARROW = 4
    PLANT = 5


class Action(IntEnum):
    NOOP = 0
    MOVE_LEFT = 1
    MOVE_RIGHT = 2
    MOVE_UP = 3
    MOVE_DOWN = 4
    DO = 5
    SLEEP = 6
    PLACE_STONE = 7
    PLACE_TABLE = 8
    PLACE_FURNACE = 9
    PLACE_PLANT = 10
    MAKE_WOOD_PICKAXE = 11
    MAKE_STONE_PICKAXE = 12
    MAKE_IRON_PICKAXE = 13
    MAKE_WOOD_SWORD = 14
    MAKE_STONE_SWORD = 15
    MAKE_IRON_SWORD = 16


N_ACTIONS = 17
ACTION_NAMES = tuple(a.name.lower() for a in Action)

# Facing values reuse the movement sub-indices: 0=west 1=east 2=north 3=south.
FACING_WEST, FACING_EAST, FACING_NORTH, FACING_SOUTH = range(4)
DX = (-1, 1, 0, 0)
DY = (0, 0, -1, 1)


class Item(IntEnum):
    """Inventory slots, in HUD display order."""

    SAPLING = 0
    WOOD = 1
    STONE = 2
    COAL = 3
    IRON = 4
    DIAMOND = 5
    WOOD_PICKAXE = 6
    STONE_PICKAXE = 7
    IRON_PICKAXE = 8
    WOOD_SWORD = 9
    STONE_SWORD = 10
    IRON_SWORD = 11


N_ITEMS = 12
ITEM_NAMES = tuple(i.name.lower() for i in Item)
TOOLS = frozenset(
    {
        Item.WOOD_PICKAXE,
        Item.STONE_PICKAXE,
        Item.IRON_PICKAXE,
        Item.WOOD_SWORD,
        Item.STONE_SWORD,
        Item.IRON_SWORD,
    }
)


class Achievement(IntEnum):
    COLLECT_COAL = 0
    COLLECT_DIAMOND = 1
    COLLECT_DRINK = 2
    COLLECT_IRON = 3
    COLLECT_SAPLING = 4
    COLLECT_STONE = 5
    COLLECT_WOOD = 6
    DEFEAT_SKELETON = 7
    DEFEAT_ZOMBIE = 8
    EAT_COW = 9
    EAT_PLANT = 10
    MAKE_IRON_PICKAXE = 11
    MAKE_IRON_SWORD = 12
    MAKE_STONE_PICKAXE = 13
    MAKE_STONE_SWORD = 14
    MAKE_WOOD_PICKAXE = 15
    MAKE_WOOD_SWORD = 16
    PLACE_FURNACE = 17
    PLACE_PLANT = 18
    PLACE_STONE = 19
    PLACE_TABLE = 20
    WAKE_UP = 21


N_ACHIEVEMENTS = 22
ACHIEVEMENT_NAMES = tuple(a.name.lower() for a in Achievement)

WORLD_SIZE = 64
VIEW_W = 9  # 4 cells west + player + 4 cells east
VIEW_H = 7  # 3 cells north + player + 3 cells south
EPISODE_LIMIT = 10_000
MAX_VITAL = 9
