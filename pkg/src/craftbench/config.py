"""The balance table: every tunable constant in one flat config.

Serialized as UTF-8 text, one ``key = value`` per line, ``#`` comments.
The defaults were calibrated so a uniform-random policy lands near the
expected baseline profile; see README for the calibration procedure.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import IoFailure


@dataclass
class BalanceConfig:
    # --- world generation ---
    elevation_scale: float = 18.0  # cells per noise period (low freq -> big regions)
    elevation_octaves: int = 3
    forest_scale: float = 9.0
    cave_scale: float = 7.0
    water_threshold: float = -0.32
    sand_threshold: float = -0.24
    mountain_threshold: float = 0.30
    cave_threshold: float = 0.40
    forest_threshold: float = 0.18
    tree_prob: float = 0.50
    coal_prob: float = 0.045
    iron_prob: float = 0.022
    diamond_prob: float = 0.050
    diamond_min_elevation: float = 0.42
    lava_prob: float = 0.040
    lava_min_elevation: float = 0.45
    spawn_clearance_radius: int = 8  # no exposed stone this close to spawn
    worldgen_max_retries: int = 100
    # --- initial creatures / population targets ---
    init_cows: int = 5
    init_zombies: int = 3
    init_skeletons: int = 4
    zombie_spawn_min_dist: int = 14
    cow_target: int = 5
    zombie_target_day: int = 3
    night_zombie_multiplier: int = 3
    skeleton_target: int = 4
    despawn_radius: int = 16
    # --- vitals ---
    food_decay_ticks: int = 60
    water_decay_ticks: int = 45
    energy_decay_ticks: int = 80
    starve_damage_ticks: int = 25
    regen_ticks: int = 30
    sleep_restore_ticks: int = 5
    food_from_cow: int = 6
    food_from_plant: int = 6
    water_per_drink: int = 1
    # --- combat ---
    damage_bare: int = 1
    damage_wood_sword: int = 2
    damage_stone_sword: int = 3
    damage_iron_sword: int = 5
    cow_health: int = 3
    zombie_health: int = 5
    skeleton_health: int = 3
    zombie_damage: int = 2
    zombie_attack_cooldown: int = 5
    zombie_aggro_radius: int = 6
    zombie_walk_prob: float = 0.3
    cow_walk_prob: float = 0.3
    skeleton_walk_prob: float = 0.2
    skeleton_flee_radius: int = 3
    skeleton_range: int = 6
    skeleton_reload_ticks: int = 12
    arrow_damage: int = 2
    # --- interaction ---
    near_radius: int = 2  # Chebyshev radius for "nearby" table/furnace
    sapling_prob: float = 0.1
    plant_ripen_ticks: int = 100
    # tool tier needed to collect each ore-like material (1 wood, 2 stone, 3 iron)
    stone_tool_tier: int = 1
    coal_tool_tier: int = 1
    iron_tool_tier: int = 2
    diamond_tool_tier: int = 3
    # --- recipe costs ---
    table_wood_cost: int = 1
    furnace_stone_cost: int = 1
    stone_place_cost: int = 1
    plant_sapling_cost: int = 1
    tool_wood_cost: int = 1
    tool_stone_cost: int = 1
    tool_coal_cost: int = 1
    tool_iron_cost: int = 1
    # --- time ---
    day_length: int = 300
    night_length: int = 100  # final portion of each day

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name.endswith(("_ticks", "_length", "_radius", "_cost", "_retries")):
                if value <= 0:
                    raise ValueError(f"{f.name} must be strictly positive, got {value}")
        if not 0 < self.night_length < self.day_length:
            raise ValueError("night_length must lie inside the day")

    def to_text(self) -> str:
        lines = ["# craftbench balance table"]
        for f in fields(self):
            lines.append(f"{f.name} = {getattr(self, f.name)!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BalanceConfig":
        defaults = cls()
        values = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
            key, _, rhs = line.partition("=")
            key, rhs = key.strip(), rhs.strip()
            if not hasattr(defaults, key):
                raise ValueError(f"line {lineno}: unknown key {key!r}")
            kind = type(getattr(defaults, key))
            values[key] = kind(float(rhs)) if kind is int else kind(rhs)
        cfg = cls(**values)
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path: str | Path | None) -> "BalanceConfig":
        if path is None:
            return cls()
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot read config {path}") from exc
        return cls.from_text(text)

    def save(self, path: str | Path) -> None:
        try:
            Path(path).write_text(self.to_text(), encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot write config {path}") from exc

    def digest(self) -> str:
        """Stable hash of the full balance table, recorded in episode files."""
        return hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()[:16]
