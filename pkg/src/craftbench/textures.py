"""Embedded sprite atlas: 16x16 RGB tiles authored in code.

Everything is built from integer literals at import time, so the atlas
bytes (and therefore every rendered observation) are identical on every
platform and install. Entity sprites use magenta (255, 0, 255) as the
transparency key; terrain tiles are opaque.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

import numpy as np

KEY = (255, 0, 255)
SPRITE = 16


def _canvas(color=KEY) -> np.ndarray:
    tile = np.zeros((SPRITE, SPRITE, 3), dtype=np.uint8)
    tile[:, :] = color
    return tile


def _px(tile, coords, color) -> None:
    for x, y in coords:
        tile[y, x] = color


def _rect(tile, x0, y0, x1, y1, color) -> None:
    tile[y0 : y1 + 1, x0 : x1 + 1] = color


def _scatter(tile, color, step=5, phase=0) -> None:
    # fixed quasi-random speckle: offsets derived from cell index arithmetic
    for i in range(0, SPRITE * SPRITE, step):
        j = (i * 7 + phase * 13) % (SPRITE * SPRITE)
        tile[j // SPRITE, j % SPRITE] = color


def _water() -> np.ndarray:
    t = _canvas((58, 98, 178))
    for y in range(1, SPRITE, 4):
        for x in range(SPRITE):
            if (x + y) % 8 < 3:
                t[y, x] = (82, 126, 204)
    return t


def _sand() -> np.ndarray:
    t = _canvas((220, 203, 143))
    _scatter(t, (196, 178, 112), step=6, phase=1)
    _scatter(t, (236, 222, 170), step=7, phase=3)
    return t


def _grass() -> np.ndarray:
    t = _canvas((93, 161, 48))
    _scatter(t, (72, 135, 36), step=5, phase=0)
    _scatter(t, (116, 186, 66), step=6, phase=2)
    return t


def _tree() -> np.ndarray:
    t = _grass()
    _rect(t, 6, 9, 9, 14, (96, 64, 34))
    _rect(t, 2, 2, 13, 9, (40, 96, 34))
    _rect(t, 4, 0, 11, 2, (40, 96, 34))
    _px(t, [(3, 4), (7, 3), (11, 5), (5, 7), (10, 8)], (60, 126, 48))
    return t


def _path() -> np.ndarray:
    t = _canvas((156, 141, 118))
    _scatter(t, (134, 120, 98), step=5, phase=4)
    _scatter(t, (174, 160, 138), step=7, phase=1)
    return t


def _stone_base() -> np.ndarray:
    t = _canvas((124, 124, 124))
    for y0, x0 in ((0, 0), (0, 8), (8, 4), (8, 12), (4, 2)):
        _rect(t, x0 % SPRITE, y0, min(15, x0 % SPRITE + 5), min(15, y0 + 3), (134, 134, 134))
    for y in (3, 7, 11, 15):
        t[y, :] = (104, 104, 104)
    for x in (5, 10):
        t[:, x] = (104, 104, 104)
    return t


def _lumps(base, color) -> np.ndarray:
    t = base.copy()
    for cx, cy in ((4, 4), (11, 3), (3, 11), (10, 10), (13, 13)):
        _rect(t, cx - 1, cy, cx + 1, cy + 1, color)
        _px(t, [(cx, cy - 1)], color)
    return t


def _coal() -> np.ndarray:
    return _lumps(_stone_base(), (34, 34, 38))


def _iron() -> np.ndarray:
    return _lumps(_stone_base(), (193, 127, 81))


def _diamond() -> np.ndarray:
    return _lumps(_stone_base(), (106, 220, 228))


def _lava() -> np.ndarray:
    t = _canvas((206, 72, 16))
    for y in range(SPRITE):
        for x in range(SPRITE):
            if (x * 3 + y * 5) % 11 < 3:
                t[y, x] = (250, 146, 42)
            elif (x * 5 + y * 3) % 13 < 2:
                t[y, x] = (160, 44, 10)
    return t


def _table() -> np.ndarray:
    t = _grass()
    _rect(t, 1, 3, 14, 6, (168, 117, 62))
    t[4, 1:15] = (140, 94, 48)
    _rect(t, 2, 7, 4, 14, (128, 86, 44))
    _rect(t, 11, 7, 13, 14, (128, 86, 44))
    return t


def _furnace() -> np.ndarray:
    t = _stone_base()
    _rect(t, 3, 5, 12, 14, (88, 88, 88))
    _rect(t, 5, 8, 10, 13, (30, 30, 30))
    _rect(t, 6, 10, 9, 12, (236, 128, 28))
    _px(t, [(7, 9), (8, 9)], (252, 196, 60))
    return t


def _plant_material() -> np.ndarray:
    t = _grass()
    _sprout(t, ripe=False)
    return t


def _sprout(t, ripe: bool) -> None:
    _rect(t, 7, 8, 8, 13, (64, 128, 44))
    _px(t, [(5, 7), (6, 8), (9, 8), (10, 7), (7, 6), (8, 6)], (84, 160, 56))
    if ripe:
        _px(t, [(5, 6), (10, 6), (7, 4), (8, 5)], (214, 60, 70))


def _plant_entity(ripe: bool) -> np.ndarray:
    t = _canvas()
    _sprout(t, ripe)
    return t


def _player(facing: int) -> np.ndarray:
    t = _canvas()
    _rect(t, 5, 2, 10, 7, (232, 194, 152))  # head
    _rect(t, 4, 8, 11, 13, (92, 106, 138))  # body
    _rect(t, 5, 14, 6, 15, (60, 52, 44))
    _rect(t, 9, 14, 10, 15, (60, 52, 44))
    eye = (38, 38, 46)
    if facing == 0:  # west
        _px(t, [(5, 4), (7, 4)], eye)
    elif facing == 1:  # east
        _px(t, [(8, 4), (10, 4)], eye)
    elif facing == 2:  # north
        _rect(t, 5, 2, 10, 7, (150, 116, 78))  # back of head - hair
    else:  # south
        _px(t, [(6, 4), (9, 4)], eye)
        _px(t, [(7, 6), (8, 6)], (190, 140, 110))
    return t


def _cow() -> np.ndarray:
    t = _canvas()
    _rect(t, 2, 5, 13, 12, (236, 236, 232))
    _rect(t, 3, 6, 6, 9, (72, 56, 48))
    _rect(t, 10, 9, 12, 11, (72, 56, 48))
    _rect(t, 11, 3, 15, 8, (236, 236, 232))  # head
    _rect(t, 13, 6, 15, 8, (232, 166, 172))  # snout
    _px(t, [(12, 4)], (30, 30, 30))
    _rect(t, 3, 13, 4, 15, (210, 210, 206))
    _rect(t, 11, 13, 12, 15, (210, 210, 206))
    return t


def _zombie() -> np.ndarray:
    t = _canvas()
    _rect(t, 5, 1, 10, 6, (96, 156, 76))
    _px(t, [(6, 3), (9, 3)], (20, 26, 20))
    _rect(t, 4, 7, 11, 12, (70, 118, 56))
    _rect(t, 2, 7, 3, 10, (96, 156, 76))
    _rect(t, 12, 7, 13, 10, (96, 156, 76))
    _rect(t, 5, 13, 6, 15, (52, 88, 42))
    _rect(t, 9, 13, 10, 15, (52, 88, 42))
    return t


def _skeleton() -> np.ndarray:
    t = _canvas()
    _rect(t, 5, 1, 10, 6, (228, 228, 218))
    _px(t, [(6, 3), (9, 3)], (24, 24, 24))
    _px(t, [(7, 5), (8, 5)], (150, 150, 142))
    _rect(t, 6, 7, 9, 12, (216, 216, 206))
    for y in (8, 10, 12):
        t[y, 5:11] = (228, 228, 218)
    _rect(t, 6, 13, 6, 15, (216, 216, 206))
    _rect(t, 9, 13, 9, 15, (216, 216, 206))
    return t


def _arrow(direction: int) -> np.ndarray:
    t = _canvas()
    shaft = (150, 112, 68)
    tip = (190, 190, 196)
    if direction in (0, 1):  # horizontal
        t[7:9, 2:14] = shaft
        if direction == 1:
            _px(t, [(14, 7), (14, 8), (13, 6), (13, 9)], tip)
        else:
            _px(t, [(1, 7), (1, 8), (2, 6), (2, 9)], tip)
    else:
        t[2:14, 7:9] = shaft
        if direction == 3:
            _px(t, [(7, 14), (8, 14), (6, 13), (9, 13)], tip)
        else:
            _px(t, [(7, 1), (8, 1), (6, 2), (9, 2)], tip)
    return t


def _icon_health() -> np.ndarray:
    t = _canvas()
    heart = (214, 48, 62)
    _rect(t, 3, 4, 6, 7, heart)
    _rect(t, 9, 4, 12, 7, heart)
    _rect(t, 3, 7, 12, 9, heart)
    _rect(t, 5, 10, 10, 11, heart)
    _rect(t, 7, 12, 8, 13, heart)
    return t


def _icon_food() -> np.ndarray:
    t = _canvas()
    _rect(t, 4, 3, 10, 9, (172, 112, 54))
    _rect(t, 9, 9, 12, 12, (238, 230, 214))
    _px(t, [(11, 13), (13, 11)], (238, 230, 214))
    return t


def _icon_water() -> np.ndarray:
    t = _canvas()
    drop = (64, 118, 228)
    _rect(t, 6, 3, 9, 5, drop)
    _rect(t, 5, 6, 10, 10, drop)
    _rect(t, 6, 11, 9, 12, drop)
    _px(t, [(6, 7)], (140, 180, 248))
    return t


def _icon_energy() -> np.ndarray:
    t = _canvas()
    bolt = (240, 206, 48)
    _px(t, [(9, 2), (8, 3), (7, 4), (6, 5), (6, 6)], bolt)
    _rect(t, 6, 7, 10, 8, bolt)
    _px(t, [(9, 9), (8, 10), (7, 11), (6, 12), (5, 13)], bolt)
    return t


def _tool_icon(head_color) -> np.ndarray:
    t = _canvas()
    _rect(t, 7, 6, 8, 14, (120, 86, 48))
    _rect(t, 3, 2, 12, 4, head_color)
    _px(t, [(3, 5), (12, 5)], head_color)
    return t


def _sword_icon(blade_color) -> np.ndarray:
    t = _canvas()
    _rect(t, 7, 1, 8, 9, blade_color)
    _rect(t, 5, 10, 10, 11, (120, 86, 48))
    _rect(t, 7, 12, 8, 14, (96, 64, 34))
    return t


def _item_icon(color) -> np.ndarray:
    t = _canvas()
    _rect(t, 4, 4, 11, 11, color)
    _rect(t, 5, 5, 10, 6, tuple(min(255, c + 30) for c in color))
    return t


WOOD_COLOR = (140, 97, 50)
STONE_COLOR = (118, 118, 118)
COAL_COLOR = (40, 40, 44)
IRON_COLOR = (193, 127, 81)
DIAMOND_COLOR = (106, 220, 228)
SAPLING_COLOR = (84, 160, 56)


@lru_cache(maxsize=1)
def build_atlas() -> dict[str, np.ndarray]:
    atlas = {
        "water": _water(),
        "sand": _sand(),
        "grass": _grass(),
        "tree": _tree(),
        "path": _path(),
        "stone": _stone_base(),
        "coal": _coal(),
        "iron": _iron(),
        "diamond": _diamond(),
        "lava": _lava(),
        "table": _table(),
        "furnace": _furnace(),
        "plant_material": _plant_material(),
        "player_west": _player(0),
        "player_east": _player(1),
        "player_north": _player(2),
        "player_south": _player(3),
        "cow": _cow(),
        "zombie": _zombie(),
        "skeleton": _skeleton(),
        "arrow_west": _arrow(0),
        "arrow_east": _arrow(1),
        "arrow_north": _arrow(2),
        "arrow_south": _arrow(3),
        "plant": _plant_entity(False),
        "plant_ripe": _plant_entity(True),
        "icon_health": _icon_health(),
        "icon_food": _icon_food(),
        "icon_water": _icon_water(),
        "icon_energy": _icon_energy(),
        "icon_sapling": _item_icon(SAPLING_COLOR),
        "icon_wood": _item_icon(WOOD_COLOR),
        "icon_stone": _item_icon(STONE_COLOR),
        "icon_coal": _item_icon(COAL_COLOR),
        "icon_iron": _item_icon(IRON_COLOR),
        "icon_diamond": _item_icon(DIAMOND_COLOR),
        "icon_wood_pickaxe": _tool_icon(WOOD_COLOR),
        "icon_stone_pickaxe": _tool_icon(STONE_COLOR),
        "icon_iron_pickaxe": _tool_icon(IRON_COLOR),
        "icon_wood_sword": _sword_icon(WOOD_COLOR),
        "icon_stone_sword": _sword_icon(STONE_COLOR),
        "icon_iron_sword": _sword_icon(IRON_COLOR),
    }
    for tile in atlas.values():
        tile.setflags(write=False)
    return atlas


# 3x5 digit bitmaps, rows top to bottom.
_DIGIT_ROWS = {
    0: ("111", "101", "101", "101", "111"),
    1: ("010", "110", "010", "010", "111"),
    2: ("111", "001", "111", "100", "111"),
    3: ("111", "001", "111", "001", "111"),
    4: ("101", "101", "111", "001", "001"),
    5: ("111", "100", "111", "001", "111"),
    6: ("111", "100", "111", "101", "111"),
    7: ("111", "001", "010", "010", "010"),
    8: ("111", "101", "111", "101", "111"),
    9: ("111", "101", "111", "001", "111"),
}


def digit_glyphs() -> np.ndarray:
    glyphs = np.zeros((10, 5, 3), dtype=np.uint8)
    for d, rows in _DIGIT_ROWS.items():
        for y, row in enumerate(rows):
            for x, ch in enumerate(row):
                glyphs[d, y, x] = ch == "1"
    return glyphs


def downscale7(tile: np.ndarray) -> np.ndarray:
    """16x16 -> 7x7 nearest-neighbor with the fixed index map."""
    idx = [(i * SPRITE) // 7 for i in range(7)]
    return tile[np.ix_(idx, idx)].copy()


def atlas_hash() -> str:
    """Stable content hash over the full atlas (sorted by sprite name)."""
    atlas = build_atlas()
    h = hashlib.sha256()
    for name in sorted(atlas):
        h.update(name.encode())
        h.update(atlas[name].tobytes())
    h.update(digit_glyphs().tobytes())
    return h.hexdigest()
