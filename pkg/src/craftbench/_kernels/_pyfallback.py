"""Pure-Python/numpy implementations of the hot kernels.

This module is the behavioral reference for ``_native.pyx``: every RNG
draw, comparison, and arithmetic expression here must match the compiled
version operation-for-operation, because the equivalence suite asserts
bit-identical episode streams between the two.

RNG protocol: each subsystem stream is one uint64 cell in the shared
``rng_states`` array, advanced as SplitMix64 (state += GOLDEN, output =
mix64(state)). Probabilities compare a 53-bit float in [0, 1) against the
configured threshold; bounded ints use the multiply-shift reduction.
"""

from __future__ import annotations

import numpy as np

# Stream indices inside rng_states.
RNG_CREATURES, RNG_SPAWNING, RNG_VIEWNOISE, RNG_PLAYER = range(4)

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# Material ids (mirrors defs.Material; plain ints for kernel parity).
WATER, SAND, GRASS, TREE, PATH, STONE, COAL, IRON, DIAMOND, LAVA = range(10)
TABLE, FURNACE, PLANT_MAT = 10, 11, 12

# Entity kinds (mirrors defs.EntityKind).
K_PLAYER, K_COW, K_ZOMBIE, K_SKELETON, K_ARROW, K_PLANT = range(6)

DX = (-1, 1, 0, 0)
DY = (0, 0, -1, 1)

SIZE = 64
VIEW_W, VIEW_H = 9, 7
TILE = 7
VIEW_PX_W, VIEW_PX_H = VIEW_W * TILE, VIEW_H * TILE  # 63 x 49
HUD_Y0 = VIEW_PX_H  # rows 49.. are the HUD band
HUD_BG = 18
COLORKEY = 255  # sprites use (255, 0, 255) as transparent
NIGHT_RADIUS = 2
NIGHT_MUL = 102  # v * 102 >> 8  ~ 0.4
SLEEP_MUL = 64  # v * 64 >> 8   = 0.25
SPECKLE_P = 0.05

# Entity tile indices (render): 0..3 player WENS, 4 cow, 5 zombie,
# 6 skeleton, 7..10 arrow WENS, 11 plant, 12 ripe plant.
ET_PLAYER, ET_COW, ET_ZOMBIE, ET_SKELETON, ET_ARROW, ET_PLANT = 0, 4, 5, 6, 7, 11

INV_FLOAT = 1.0 / 9007199254740992.0  # 2**-53


def _mix64(z: int) -> int:
    z ^= z >> 30
    z = (z * _M1) & MASK64
    z ^= z >> 27
    z = (z * _M2) & MASK64
    z ^= z >> 31
    return z


def _next_u64(rng_states: np.ndarray, idx: int) -> int:
    s = (int(rng_states[idx]) + GOLDEN) & MASK64
    rng_states[idx] = s
    return _mix64(s)


def _next_float(rng_states: np.ndarray, idx: int) -> float:
    return (_next_u64(rng_states, idx) >> 11) * INV_FLOAT


def _next_below(rng_states: np.ndarray, idx: int, n: int) -> int:
    return (_next_u64(rng_states, idx) * n) >> 64


# ---------------------------------------------------------------------------
# noise


def noise_grid(perm: np.ndarray, freq: float, out: np.ndarray) -> None:
    """One octave of raw simplex-lattice noise at integer cells, scaled by 54.

    Mirrors craftbench.noise.noise2_perm exactly (same expression order).
    """
    size = out.shape[0]
    skew = 0.5 * (np.sqrt(3.0) - 1.0)
    unskew = (3.0 - np.sqrt(3.0)) / 6.0
    grad_x = np.array([1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 0.0, 0.0])
    grad_y = np.array([1.0, 1.0, -1.0, -1.0, 0.0, 0.0, 1.0, -1.0])

    iy, ix = np.mgrid[0:size, 0:size]
    x = ix.astype(np.float64) * freq
    y = iy.astype(np.float64) * freq
    s = (x + y) * skew
    i = np.floor(x + s)
    j = np.floor(y + s)
    t = (i + j) * unskew
    x0 = x - (i - t)
    y0 = y - (j - t)
    lower = x0 > y0
    i1 = np.where(lower, 1, 0)
    j1 = np.where(lower, 0, 1)
    x1 = x0 - i1 + unskew
    y1 = y0 - j1 + unskew
    x2 = x0 - 1.0 + 2.0 * unskew
    y2 = y0 - 1.0 + 2.0 * unskew
    ii = i.astype(np.int64) & 255
    jj = j.astype(np.int64) & 255
    g0 = perm[(ii + perm[jj]) & 255] & 7
    g1 = perm[(ii + i1 + perm[(jj + j1) & 255]) & 255] & 7
    g2 = perm[(ii + 1 + perm[(jj + 1) & 255]) & 255] & 7

    def corner(t_, gx, gy, cx, cy):
        t2 = t_ * t_
        val = t2 * t2 * (gx * cx + gy * cy)
        return np.where(t_ < 0.0, 0.0, val)

    n0 = corner(0.5 - x0 * x0 - y0 * y0, grad_x[g0], grad_y[g0], x0, y0)
    n1 = corner(0.5 - x1 * x1 - y1 * y1, grad_x[g1], grad_y[g1], x1, y1)
    n2 = corner(0.5 - x2 * x2 - y2 * y2, grad_x[g2], grad_y[g2], x2, y2)
    out[:, :] = 54.0 * ((n0 + n1) + n2)


# ---------------------------------------------------------------------------
# creature simulation helpers


def _walkable(grid, occ, px, py, nx, ny) -> bool:
    if not (1 <= nx <= SIZE - 2 and 1 <= ny <= SIZE - 2):
        return False
    m = grid[ny, nx]
    if m != GRASS and m != SAND and m != PATH:
        return False
    if occ[ny, nx] >= 0:
        return False
    return not (nx == px and ny == py)


def _try_move(grid, occ, ex, ey, i, d, px, py) -> bool:
    nx = ex[i] + DX[d]
    ny = ey[i] + DY[d]
    if _walkable(grid, occ, px, py, nx, ny):
        occ[ey[i], ex[i]] = -1
        ex[i] = nx
        ey[i] = ny
        occ[ny, nx] = i
        return True
    return False


def _dir_on_axis(delta: int, axis_x: bool) -> int:
    if axis_x:
        return 1 if delta > 0 else 0  # E / W
    return 3 if delta > 0 else 2  # S / N


def _step_along(grid, occ, ex, ey, i, px, py, dx, dy, rng_states) -> None:
    """Move one cell along (dx, dy): larger axis first, RNG tie-break."""
    adx, ady = abs(dx), abs(dy)
    if adx > ady:
        axis_x = True
    elif adx < ady:
        axis_x = False
    else:
        axis_x = (_next_u64(rng_states, RNG_CREATURES) & 1) == 1
    first = _dir_on_axis(dx if axis_x else dy, axis_x)
    if not _try_move(grid, occ, ex, ey, i, first, px, py):
        other_delta = dy if axis_x else dx
        if other_delta != 0:
            second = _dir_on_axis(other_delta, not axis_x)
            _try_move(grid, occ, ex, ey, i, second, px, py)


def _line_clear(grid, x0, y0, x1, y1) -> bool:
    """Axis-aligned line of sight over arrow-passable cells, endpoints excluded."""
    if x0 == x1:
        step = 1 if y1 > y0 else -1
        for y in range(y0 + step, y1, step):
            m = grid[y, x0]
            if m != GRASS and m != SAND and m != PATH:
                return False
        return True
    step = 1 if x1 > x0 else -1
    for x in range(x0 + step, x1, step):
        m = grid[y0, x]
        if m != GRASS and m != SAND and m != PATH:
            return False
    return True


def _find_slot(alive: np.ndarray) -> int:
    for i in range(alive.shape[0]):
        if alive[i] == 0:
            return i
    return -1


def _kill(occ, kind, ex, ey, alive, kind_counts, i) -> None:
    alive[i] = 0
    k = kind[i]
    kind_counts[k] -= 1
    if k != K_ARROW:
        occ[ey[i], ex[i]] = -1


def tick_creatures(
    grid,
    occ,
    kind,
    ex,
    ey,
    ehealth,
    eaux,
    edir,
    alive,
    kind_counts,
    px,
    py,
    rng_states,
    cow_walk_prob,
    zombie_walk_prob,
    zombie_aggro_radius,
    zombie_damage,
    zombie_attack_cooldown,
    skeleton_walk_prob,
    skeleton_flee_radius,
    skeleton_range,
    skeleton_reload_ticks,
    arrow_damage,
    plant_ripen_ticks,
) -> int:
    """Advance every creature, arrow, and plant one tick.

    Returns total damage dealt to the player this tick.
    """
    damage = 0
    cap = alive.shape[0]
    pending_arrows = []
    for i in range(cap):
        if alive[i] == 0:
            continue
        k = kind[i]
        if k == K_COW:
            if _next_float(rng_states, RNG_CREATURES) < cow_walk_prob:
                d = _next_below(rng_states, RNG_CREATURES, 4)
                _try_move(grid, occ, ex, ey, i, d, px, py)
        elif k == K_ZOMBIE:
            if eaux[i] > 0:
                eaux[i] -= 1
            dx = px - ex[i]
            dy = py - ey[i]
            adx, ady = abs(dx), abs(dy)
            if adx + ady == 1:
                if eaux[i] == 0:
                    damage += zombie_damage
                    eaux[i] = zombie_attack_cooldown
            elif max(adx, ady) <= zombie_aggro_radius:
                _step_along(grid, occ, ex, ey, i, px, py, dx, dy, rng_states)
            else:
                if _next_float(rng_states, RNG_CREATURES) < zombie_walk_prob:
                    d = _next_below(rng_states, RNG_CREATURES, 4)
                    _try_move(grid, occ, ex, ey, i, d, px, py)
        elif k == K_SKELETON:
            if eaux[i] > 0:
                eaux[i] -= 1
            dx = px - ex[i]
            dy = py - ey[i]
            dist = max(abs(dx), abs(dy))
            aligned = (dx == 0 or dy == 0) and dist > 0
            if dist <= skeleton_flee_radius:
                _step_along(grid, occ, ex, ey, i, px, py, -dx, -dy, rng_states)
            elif (
                aligned
                and dist <= skeleton_range
                and eaux[i] == 0
                and _line_clear(grid, ex[i], ey[i], px, py)
            ):
                if dx == 0:
                    d = 3 if dy > 0 else 2
                else:
                    d = 1 if dx > 0 else 0
                pending_arrows.append((ex[i], ey[i], d))
                eaux[i] = skeleton_reload_ticks
            else:
                if _next_float(rng_states, RNG_CREATURES) < skeleton_walk_prob:
                    d = _next_below(rng_states, RNG_CREATURES, 4)
                    _try_move(grid, occ, ex, ey, i, d, px, py)
        elif k == K_ARROW:
            nx = ex[i] + DX[edir[i]]
            ny = ey[i] + DY[edir[i]]
            if nx == px and ny == py:
                damage += arrow_damage
                _kill(occ, kind, ex, ey, alive, kind_counts, i)
            elif not (1 <= nx <= SIZE - 2 and 1 <= ny <= SIZE - 2):
                _kill(occ, kind, ex, ey, alive, kind_counts, i)
            else:
                m = grid[ny, nx]
                if m != GRASS and m != SAND and m != PATH:
                    _kill(occ, kind, ex, ey, alive, kind_counts, i)
                else:
                    ex[i] = nx
                    ey[i] = ny
        elif k == K_PLANT:
            if eaux[i] < plant_ripen_ticks:
                eaux[i] += 1
    for ax, ay, d in pending_arrows:
        slot = _find_slot(alive)
        if slot < 0:
            continue
        kind[slot] = K_ARROW
        ex[slot] = ax
        ey[slot] = ay
        ehealth[slot] = 1
        eaux[slot] = 0
        edir[slot] = d
        alive[slot] = 1
        kind_counts[K_ARROW] += 1
    return damage


def balance_spawns(
    grid,
    cave_mask,
    occ,
    kind,
    ex,
    ey,
    ehealth,
    eaux,
    edir,
    alive,
    kind_counts,
    px,
    py,
    rng_states,
    cow_target,
    zombie_target,
    skeleton_target,
    cow_health,
    zombie_health,
    skeleton_health,
    despawn_radius,
) -> None:
    """Keep creature populations at their targets.

    One spawn attempt (8 rejection samples, outside the player's view) or
    one far-despawn per species per tick, in fixed species order.
    """
    species = (
        (K_COW, cow_target, cow_health, False),
        (K_ZOMBIE, zombie_target, zombie_health, False),
        (K_SKELETON, skeleton_target, skeleton_health, True),
    )
    for k, target, health, in_cave in species:
        count = kind_counts[k]
        if count < target:
            for _ in range(8):
                x = 1 + _next_below(rng_states, RNG_SPAWNING, SIZE - 2)
                y = 1 + _next_below(rng_states, RNG_SPAWNING, SIZE - 2)
                if abs(x - px) <= 4 and abs(y - py) <= 3:
                    continue
                if in_cave:
                    if grid[y, x] != PATH or cave_mask[y, x] == 0:
                        continue
                elif grid[y, x] != GRASS:
                    continue
                if occ[y, x] >= 0 or (x == px and y == py):
                    continue
                slot = _find_slot(alive)
                if slot < 0:
                    break
                kind[slot] = k
                ex[slot] = x
                ey[slot] = y
                ehealth[slot] = health
                eaux[slot] = 0
                edir[slot] = 0
                alive[slot] = 1
                occ[y, x] = slot
                kind_counts[k] += 1
                break
        elif count > target:
            for i in range(alive.shape[0]):
                if (
                    alive[i] == 1
                    and kind[i] == k
                    and max(abs(ex[i] - px), abs(ey[i] - py)) > despawn_radius
                ):
                    _kill(occ, kind, ex, ey, alive, kind_counts, i)
                    break


# ---------------------------------------------------------------------------
# renderer


def render_observation(
    out,
    grid,
    kind,
    ex,
    ey,
    eaux,
    edir,
    alive,
    px,
    py,
    facing,
    sleeping,
    night,
    inventory,
    vitals,
    rng_states,
    mat_tiles,
    ent_tiles,
    icon_tiles,
    digit_glyphs,
    plant_ripen_ticks,
) -> None:
    """Rasterize the 64x64x3 observation: local view, filters, HUD."""
    out[:, :, :] = 0
    # --- material layer ---
    for cy in range(VIEW_H):
        wy = py - 3 + cy
        for cx in range(VIEW_W):
            wx = px - 4 + cx
            if 0 <= wx < SIZE and 0 <= wy < SIZE:
                out[cy * TILE : cy * TILE + TILE, cx * TILE : cx * TILE + TILE] = (
                    mat_tiles[grid[wy, wx]]
                )
    # --- entities: creatures/plants, then arrows, then the player ---
    for arrow_pass in (False, True):
        for i in range(alive.shape[0]):
            if alive[i] == 0:
                continue
            k = kind[i]
            if (k == K_ARROW) != arrow_pass:
                continue
            dx = ex[i] - px + 4
            dy = ey[i] - py + 3
            if 0 <= dx < VIEW_W and 0 <= dy < VIEW_H:
                if k == K_COW:
                    t = ET_COW
                elif k == K_ZOMBIE:
                    t = ET_ZOMBIE
                elif k == K_SKELETON:
                    t = ET_SKELETON
                elif k == K_ARROW:
                    t = ET_ARROW + edir[i]
                else:
                    t = ET_PLANT + (1 if eaux[i] >= plant_ripen_ticks else 0)
                _blit_keyed(out, ent_tiles[t], dx * TILE, dy * TILE)
    _blit_keyed(out, ent_tiles[ET_PLAYER + facing], 4 * TILE, 3 * TILE)
    # --- light filters over the view region only ---
    view = out[:VIEW_PX_H, :VIEW_PX_W]
    if sleeping:
        view[:, :] = (view.astype(np.uint16) * SLEEP_MUL) >> 8
    elif night:
        _night_filter(out, px, py, rng_states)
    # --- HUD band ---
    out[HUD_Y0:, :, :] = HUD_BG
    for slot in range(4):
        _draw_icon(out, icon_tiles[slot], digit_glyphs, slot, 0, vitals[slot])
    for item in range(12):
        count = inventory[item]
        if count <= 0:
            continue
        shown = count if count < 9 else 9
        if item < 5:
            _draw_icon(out, icon_tiles[4 + item], digit_glyphs, 4 + item, 0, shown)
        else:
            _draw_icon(out, icon_tiles[4 + item], digit_glyphs, item - 5, 1, shown)


def _blit_keyed(out, tile, x0, y0) -> None:
    region = out[y0 : y0 + TILE, x0 : x0 + TILE]
    mask = ~(
        (tile[:, :, 0] == COLORKEY) & (tile[:, :, 1] == 0) & (tile[:, :, 2] == COLORKEY)
    )
    region[mask] = tile[mask]


def _night_filter(out, px, py, rng_states) -> None:
    """Darken and speckle in-map view cells beyond the night radius.

    Draw order is cell row-major, pixel row-major within a cell: the native
    kernel consumes the identical stream.
    """
    for cy in range(VIEW_H):
        wy = py - 3 + cy
        for cx in range(VIEW_W):
            wx = px - 4 + cx
            if not (0 <= wx < SIZE and 0 <= wy < SIZE):
                continue
            if max(abs(cx - 4), abs(cy - 3)) <= NIGHT_RADIUS:
                continue
            cell = out[cy * TILE : cy * TILE + TILE, cx * TILE : cx * TILE + TILE]
            cell[:, :, :] = (cell.astype(np.uint16) * NIGHT_MUL) >> 8
            draws = _draw_block(rng_states, RNG_VIEWNOISE, TILE * TILE)
            floats = (draws >> np.uint64(11)).astype(np.float64) * INV_FLOAT
            speckle = floats < SPECKLE_P
            if speckle.any():
                gray = (
                    20 + ((draws >> np.uint64(32)) & np.uint64(63)).astype(np.uint8)
                ).reshape(TILE, TILE)
                sp = speckle.reshape(TILE, TILE)
                for c in range(3):
                    chan = cell[:, :, c]
                    chan[sp] = gray[sp]


def _draw_block(rng_states, idx, n) -> np.ndarray:
    base = int(rng_states[idx])
    state = (base + n * GOLDEN) & MASK64
    rng_states[idx] = state
    counters = (base + GOLDEN * np.arange(1, n + 1, dtype=np.uint64)) & np.uint64(MASK64)
    z = counters
    with np.errstate(over="ignore"):
        z = z ^ (z >> np.uint64(30))
        z = z * np.uint64(_M1)
        z = z ^ (z >> np.uint64(27))
        z = z * np.uint64(_M2)
        z = z ^ (z >> np.uint64(31))
    return z


def _draw_icon(out, tile, digit_glyphs, slot, row, value) -> None:
    x0 = slot * TILE
    y0 = HUD_Y0 + row * TILE
    _blit_keyed(out, tile, x0, y0)
    glyph = digit_glyphs[value]
    for gy in range(5):
        for gx in range(3):
            if glyph[gy, gx]:
                out[y0 + 1 + gy, x0 + 4 + gx] = 250
