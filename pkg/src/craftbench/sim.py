"""Per-tick simulation rules: actions, vitals, creatures, day cycle.

The action/crafting/placing rules live here in plain Python (they run once
per step); the per-creature and spawn-balancing loops are delegated to the
selected kernel implementation. All randomness goes through the named
streams on the WorldState, so a (state, action) pair has exactly one
successor state.

Events are reported as Achievement indices; the environment turns them
into unlocks and reward.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .config import BalanceConfig
from .defs import (
    DX,
    DY,
    MAX_VITAL,
    PLAYER_WALKABLE,
    WORLD_SIZE,
    Achievement,
    Action,
    EntityKind,
    Item,
    Material,
)
from .errors import InvalidActionIndex
from .state import RNG_PLAYER, WorldState

# Collecting a material: {material: (item gained, tool tier needed, cell afterwards)}
_PICKAXE_TIERS = (Item.WOOD_PICKAXE, Item.STONE_PICKAXE, Item.IRON_PICKAXE)

# Placement targets.
_PLACE_BASE = (Material.GRASS, Material.SAND, Material.PATH)
_PLACE_STONE_ON = _PLACE_BASE + (Material.WATER, Material.LAVA)

_MOVE_ACTIONS = {
    Action.MOVE_LEFT: 0,
    Action.MOVE_RIGHT: 1,
    Action.MOVE_UP: 2,
    Action.MOVE_DOWN: 3,
}

_SWORD_DAMAGE_FIELDS = (
    (Item.IRON_SWORD, "damage_iron_sword"),
    (Item.STONE_SWORD, "damage_stone_sword"),
    (Item.WOOD_SWORD, "damage_wood_sword"),
)


def pickaxe_tier(inv: np.ndarray) -> int:
    """0 none, 1 wood, 2 stone, 3 iron (highest owned)."""
    for tier in (3, 2, 1):
        if inv[_PICKAXE_TIERS[tier - 1]] > 0:
            return tier
    return 0


def attack_damage(inv: np.ndarray, cfg: BalanceConfig) -> int:
    for item, field in _SWORD_DAMAGE_FIELDS:
        if inv[item] > 0:
            return getattr(cfg, field)
    return cfg.damage_bare


def apply_action(
    state: WorldState, action: int, cfg: BalanceConfig
) -> tuple[list[int], int]:
    """Apply one player action. Returns (events, health_delta).

    Unmet requirements leave the state untouched (facing still turns for
    blocked moves; that is the documented movement rule, not a side
    effect). While sleeping, all actions are ignored.
    """
    if not 0 <= action < 17:
        raise InvalidActionIndex(f"action index {action} outside 0..16")
    events: list[int] = []
    if state.sleeping:
        return events, 0
    act = Action(action)
    if act == Action.NOOP:
        return events, 0
    if act in _MOVE_ACTIONS:
        return events, _move(state, _MOVE_ACTIONS[act], cfg)
    if act == Action.DO:
        _do(state, cfg, events)
        return events, 0
    if act == Action.SLEEP:
        if state.energy < MAX_VITAL:
            state.sleeping = True
            state.sleep_clock = 0
        return events, 0
    if act in (Action.PLACE_STONE, Action.PLACE_TABLE, Action.PLACE_FURNACE, Action.PLACE_PLANT):
        _place(state, act, cfg, events)
        return events, 0
    _make(state, act, cfg, events)
    return events, 0


def _facing_cell(state: WorldState) -> tuple[int, int]:
    return state.player_x + DX[state.facing], state.player_y + DY[state.facing]


def _move(state: WorldState, direction: int, cfg: BalanceConfig) -> int:
    state.facing = direction
    nx = state.player_x + DX[direction]
    ny = state.player_y + DY[direction]
    if not (1 <= nx <= WORLD_SIZE - 2 and 1 <= ny <= WORLD_SIZE - 2):
        return 0
    mat = Material(state.grid[ny, nx])
    if mat not in PLAYER_WALKABLE or state.occupancy[ny, nx] >= 0:
        return 0
    state.player_x, state.player_y = nx, ny
    if mat == Material.LAVA:
        delta = -state.health
        state.health = 0
        return delta
    return 0


def _do(state: WorldState, cfg: BalanceConfig, events: list[int]) -> None:
    tx, ty = _facing_cell(state)
    if not (0 <= tx < WORLD_SIZE and 0 <= ty < WORLD_SIZE):
        return
    target = state.entity_at(tx, ty)
    if target >= 0 and state.ent_kind[target] in (
        EntityKind.COW,
        EntityKind.ZOMBIE,
        EntityKind.SKELETON,
    ):
        _attack(state, target, cfg, events)
        return
    if target >= 0 and state.ent_kind[target] == EntityKind.PLANT:
        if state.ent_aux[target] >= cfg.plant_ripen_ticks:
            state.kill_entity(target)
            state.grid[ty, tx] = Material.GRASS
            state.food = min(MAX_VITAL, state.food + cfg.food_from_plant)
            events.append(Achievement.EAT_PLANT)
        return
    mat = Material(state.grid[ty, tx])
    inv = state.inventory
    if mat == Material.TREE:
        inv[Item.WOOD] += 1
        state.grid[ty, tx] = Material.GRASS
        events.append(Achievement.COLLECT_WOOD)
    elif mat == Material.WATER:
        state.water = min(MAX_VITAL, state.water + cfg.water_per_drink)
        events.append(Achievement.COLLECT_DRINK)
    elif mat == Material.GRASS:
        if state.rng_float(RNG_PLAYER) < cfg.sapling_prob:
            inv[Item.SAPLING] += 1
            events.append(Achievement.COLLECT_SAPLING)
    elif mat in (Material.STONE, Material.COAL, Material.IRON, Material.DIAMOND):
        tier = pickaxe_tier(inv)
        needed, item, ach = {
            Material.STONE: (cfg.stone_tool_tier, Item.STONE, Achievement.COLLECT_STONE),
            Material.COAL: (cfg.coal_tool_tier, Item.COAL, Achievement.COLLECT_COAL),
            Material.IRON: (cfg.iron_tool_tier, Item.IRON, Achievement.COLLECT_IRON),
            Material.DIAMOND: (
                cfg.diamond_tool_tier,
                Item.DIAMOND,
                Achievement.COLLECT_DIAMOND,
            ),
        }[mat]
        if 1 <= ty <= WORLD_SIZE - 2 and 1 <= tx <= WORLD_SIZE - 2 and tier >= needed:
            inv[item] += 1
            state.grid[ty, tx] = Material.PATH
            events.append(ach)
    # sand, path, lava, table, furnace: nothing to interact with


def _attack(state: WorldState, target: int, cfg: BalanceConfig, events: list[int]) -> None:
    state.ent_health[target] -= attack_damage(state.inventory, cfg)
    if state.ent_health[target] > 0:
        return
    kind = state.ent_kind[target]
    state.kill_entity(target)
    if kind == EntityKind.COW:
        state.food = min(MAX_VITAL, state.food + cfg.food_from_cow)
        events.append(Achievement.EAT_COW)
    elif kind == EntityKind.ZOMBIE:
        events.append(Achievement.DEFEAT_ZOMBIE)
    elif kind == EntityKind.SKELETON:
        events.append(Achievement.DEFEAT_SKELETON)


def _place(state: WorldState, act: Action, cfg: BalanceConfig, events: list[int]) -> None:
    tx, ty = _facing_cell(state)
    if not (1 <= tx <= WORLD_SIZE - 2 and 1 <= ty <= WORLD_SIZE - 2):
        return
    if state.occupancy[ty, tx] >= 0:
        return
    mat = Material(state.grid[ty, tx])
    inv = state.inventory
    if act == Action.PLACE_STONE:
        if mat in _PLACE_STONE_ON and inv[Item.STONE] >= cfg.stone_place_cost:
            inv[Item.STONE] -= cfg.stone_place_cost
            state.grid[ty, tx] = Material.STONE
            events.append(Achievement.PLACE_STONE)
    elif act == Action.PLACE_TABLE:
        if mat in _PLACE_BASE and inv[Item.WOOD] >= cfg.table_wood_cost:
            inv[Item.WOOD] -= cfg.table_wood_cost
            state.grid[ty, tx] = Material.TABLE
            events.append(Achievement.PLACE_TABLE)
    elif act == Action.PLACE_FURNACE:
        if mat in _PLACE_BASE and inv[Item.STONE] >= cfg.furnace_stone_cost:
            inv[Item.STONE] -= cfg.furnace_stone_cost
            state.grid[ty, tx] = Material.FURNACE
            events.append(Achievement.PLACE_FURNACE)
    elif act == Action.PLACE_PLANT:
        if mat == Material.GRASS and inv[Item.SAPLING] >= cfg.plant_sapling_cost:
            slot = state.spawn_entity(EntityKind.PLANT, tx, ty, 1)
            if slot >= 0:
                inv[Item.SAPLING] -= cfg.plant_sapling_cost
                state.grid[ty, tx] = Material.PLANT
                events.append(Achievement.PLACE_PLANT)


def nearby(state: WorldState, mat: Material, radius: int) -> bool:
    x0 = max(0, state.player_x - radius)
    x1 = min(WORLD_SIZE, state.player_x + radius + 1)
    y0 = max(0, state.player_y - radius)
    y1 = min(WORLD_SIZE, state.player_y + radius + 1)
    return bool((state.grid[y0:y1, x0:x1] == mat).any())


_RECIPES = {
    Action.MAKE_WOOD_PICKAXE: (Item.WOOD_PICKAXE, Achievement.MAKE_WOOD_PICKAXE, False, ("wood",)),
    Action.MAKE_STONE_PICKAXE: (
        Item.STONE_PICKAXE,
        Achievement.MAKE_STONE_PICKAXE,
        False,
        ("wood", "stone"),
    ),
    Action.MAKE_IRON_PICKAXE: (
        Item.IRON_PICKAXE,
        Achievement.MAKE_IRON_PICKAXE,
        True,
        ("wood", "coal", "iron"),
    ),
    Action.MAKE_WOOD_SWORD: (Item.WOOD_SWORD, Achievement.MAKE_WOOD_SWORD, False, ("wood",)),
    Action.MAKE_STONE_SWORD: (
        Item.STONE_SWORD,
        Achievement.MAKE_STONE_SWORD,
        False,
        ("wood", "stone"),
    ),
    Action.MAKE_IRON_SWORD: (
        Item.IRON_SWORD,
        Achievement.MAKE_IRON_SWORD,
        True,
        ("wood", "coal", "iron"),
    ),
}

_INGREDIENT_ITEMS = {
    "wood": Item.WOOD,
    "stone": Item.STONE,
    "coal": Item.COAL,
    "iron": Item.IRON,
}


def _make(state: WorldState, act: Action, cfg: BalanceConfig, events: list[int]) -> None:
    tool, ach, needs_furnace, ingredients = _RECIPES[act]
    if not nearby(state, Material.TABLE, cfg.near_radius):
        return
    if needs_furnace and not nearby(state, Material.FURNACE, cfg.near_radius):
        return
    inv = state.inventory
    costs = [
        (_INGREDIENT_ITEMS[name], getattr(cfg, f"tool_{name}_cost")) for name in ingredients
    ]
    if any(inv[item] < cost for item, cost in costs):
        return
    for item, cost in costs:
        inv[item] -= cost
    inv[tool] += 1
    events.append(ach)


def tick_vitals(state: WorldState, cfg: BalanceConfig, night_start: int) -> tuple[list[int], int]:
    """Hunger/thirst/fatigue decay, starvation damage, regeneration, sleep.

    Returns (events, health_delta). Sleep freezes fatigue and restores
    energy; the player wakes (with the wake event) once fully rested in
    daylight. Damage elsewhere interrupts sleep without the event.
    """
    events: list[int] = []
    delta = 0
    if state.sleeping:
        state.sleep_clock += 1
        if state.sleep_clock >= cfg.sleep_restore_ticks:
            state.sleep_clock = 0
            if state.energy < MAX_VITAL:
                state.energy += 1
        if state.energy >= MAX_VITAL and not state.is_night(night_start):
            state.sleeping = False
            events.append(Achievement.WAKE_UP)
    else:
        state.energy_clock += 1
        if state.energy_clock >= cfg.energy_decay_ticks:
            state.energy_clock = 0
            if state.energy > 0:
                state.energy -= 1
    state.food_clock += 1
    if state.food_clock >= cfg.food_decay_ticks:
        state.food_clock = 0
        if state.food > 0:
            state.food -= 1
    state.water_clock += 1
    if state.water_clock >= cfg.water_decay_ticks:
        state.water_clock = 0
        if state.water > 0:
            state.water -= 1

    if state.food == 0 or state.water == 0 or state.energy == 0:
        state.starve_clock += 1
        if state.starve_clock >= cfg.starve_damage_ticks:
            state.starve_clock = 0
            if state.health > 0:
                state.health -= 1
                delta -= 1
                if state.sleeping:
                    state.sleeping = False
    else:
        state.starve_clock = 0
    if (
        0 < state.health < MAX_VITAL
        and state.food > 0
        and state.water > 0
        and state.energy > 0
    ):
        state.regen_clock += 1
        if state.regen_clock >= cfg.regen_ticks:
            state.regen_clock = 0
            state.health += 1
            delta += 1
    else:
        state.regen_clock = 0
    return events, delta


def tick_entities(state: WorldState, cfg: BalanceConfig) -> int:
    """Advance creatures/arrows/plants via the active kernel; applies creature
    damage to the player (waking them) and returns the health delta."""
    impl = _kernels.active()
    damage = impl.tick_creatures(
        state.grid,
        state.occupancy,
        state.ent_kind,
        state.ent_x,
        state.ent_y,
        state.ent_health,
        state.ent_aux,
        state.ent_dir,
        state.ent_alive,
        state.kind_counts,
        state.player_x,
        state.player_y,
        state.rng_states,
        cfg.cow_walk_prob,
        cfg.zombie_walk_prob,
        cfg.zombie_aggro_radius,
        cfg.zombie_damage,
        cfg.zombie_attack_cooldown,
        cfg.skeleton_walk_prob,
        cfg.skeleton_flee_radius,
        cfg.skeleton_range,
        cfg.skeleton_reload_ticks,
        cfg.arrow_damage,
        cfg.plant_ripen_ticks,
    )
    if damage <= 0:
        return 0
    lost = min(damage, state.health)
    state.health -= lost
    if lost > 0 and state.sleeping:
        state.sleeping = False
    return -lost


def balance_spawns(state: WorldState, cfg: BalanceConfig, night: bool) -> None:
    impl = _kernels.active()
    ztarget = cfg.zombie_target_day * (cfg.night_zombie_multiplier if night else 1)
    impl.balance_spawns(
        state.grid,
        state.cave_mask,
        state.occupancy,
        state.ent_kind,
        state.ent_x,
        state.ent_y,
        state.ent_health,
        state.ent_aux,
        state.ent_dir,
        state.ent_alive,
        state.kind_counts,
        state.player_x,
        state.player_y,
        state.rng_states,
        cfg.cow_target,
        ztarget,
        cfg.skeleton_target,
        cfg.cow_health,
        cfg.zombie_health,
        cfg.skeleton_health,
        cfg.despawn_radius,
    )


def advance_daylight(state: WorldState, cfg: BalanceConfig) -> None:
    state.tick_in_day += 1
    if state.tick_in_day >= cfg.day_length:
        state.tick_in_day = 0
