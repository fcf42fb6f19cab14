"""Hot-kernel dispatch: compiled extension when available, numpy fallback otherwise.

The two implementations are bit-for-bit equivalent (enforced by the
equivalence test suite); selection is a pure performance decision.

Set CRAFTBENCH_KERNELS=python or =native to force one side; the default
(auto) prefers the compiled extension.
"""

from __future__ import annotations

import os

from . import _pyfallback

_REQUIRED = ("noise_grid", "tick_creatures", "balance_spawns", "render_observation")

try:
    from . import _native

    if not all(hasattr(_native, name) for name in _REQUIRED):
        _native = None
except ImportError:  # extension not built on this install
    _native = None

_FORCED: str | None = None


def available() -> tuple[str, ...]:
    return ("native", "python") if _native is not None else ("python",)


def select(name: str) -> None:
    """Force an implementation ('native', 'python', or 'auto')."""
    global _FORCED
    if name not in ("native", "python", "auto"):
        raise ValueError(f"unknown kernel implementation {name!r}")
    if name == "native" and _native is None:
        raise RuntimeError("native kernels are not built in this install")
    _FORCED = None if name == "auto" else name


def active():
    """The kernel module in effect for new work."""
    choice = _FORCED or os.environ.get("CRAFTBENCH_KERNELS", "auto")
    if choice == "python":
        return _pyfallback
    if choice == "native":
        if _native is None:
            raise RuntimeError("CRAFTBENCH_KERNELS=native but extension is missing")
        return _native
    return _native if _native is not None else _pyfallback


def active_name() -> str:
    return "native" if active() is _native else "python"
