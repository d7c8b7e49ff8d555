"""
Core configuration for cilab.

Handles enable/disable of structured logging, log levels, and the
order caps and debug switches the algebra and search modules consult.
"""

import os
from typing import Optional


# ---------------------------------------------------------------------------
# Log Levels
# ---------------------------------------------------------------------------
# debug < info < warn < error
# Each tag maps to a level. When CILAB_LEVEL is set, only tags at or
# above that level are emitted.

LEVEL_DEBUG = 0
LEVEL_INFO = 1
LEVEL_WARN = 2
LEVEL_ERROR = 3

LEVEL_NAMES = {"debug": LEVEL_DEBUG, "info": LEVEL_INFO, "warn": LEVEL_WARN, "error": LEVEL_ERROR}

TAG_LEVELS = {
    "search": LEVEL_DEBUG,
    "node": LEVEL_DEBUG,
    "info": LEVEL_INFO,
    "span": LEVEL_INFO,
    "report": LEVEL_INFO,
    "enumerate": LEVEL_INFO,
    "check": LEVEL_WARN,
    "error": LEVEL_ERROR,
}


# ---------------------------------------------------------------------------
# Order caps
# ---------------------------------------------------------------------------

ORACLE_MAX_ORDER = 3  # hard cap, never configurable

DEFAULT_MAX_ORDER = 16
DEFAULT_PROPAGATE_MAX = 6
DEFAULT_CANONICAL_MAX = 7
DEFAULT_RANDOM_MAX = 9


# ---------------------------------------------------------------------------
# Global State
# ---------------------------------------------------------------------------

_enabled: Optional[bool] = None
_level: int = LEVEL_DEBUG
_tag_prefix: str = "CILAB"

_max_order: Optional[int] = None
_propagate_max: Optional[int] = None
_canonical_max: Optional[int] = None
_random_max: Optional[int] = None
_debug_checks: Optional[bool] = None


def _truthy(val: str) -> bool:
    return val.lower() in ("true", "1", "yes", "on")


def _detect_enabled() -> bool:
    """Check environment variables to determine if logging is enabled."""
    return _truthy(os.getenv("CILAB", ""))


def _detect_level() -> int:
    """Check CILAB_LEVEL env var."""
    val = os.getenv("CILAB_LEVEL", "").lower()
    return LEVEL_NAMES.get(val, LEVEL_DEBUG)


def _env_int(name: str, default: int) -> int:
    """Positive integer from the environment, or the default."""
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def is_enabled() -> bool:
    """Check if logging is enabled. Cached after first call."""
    global _enabled
    if _enabled is None:
        _enabled = _detect_enabled()
        global _level
        _level = _detect_level()
    return _enabled


def should_emit(tag: str) -> bool:
    """Check if a tag should be emitted based on current level."""
    if not is_enabled():
        return False
    tag_level = TAG_LEVELS.get(tag, LEVEL_INFO)
    return tag_level >= _level


def enable() -> None:
    """Programmatically enable logging (for tests, REPL, notebooks)."""
    global _enabled
    _enabled = True


def disable() -> None:
    """Programmatically disable logging."""
    global _enabled
    _enabled = False


def configure(
    level: Optional[str] = None,
    tag_prefix: Optional[str] = None,
    max_order: Optional[int] = None,
    propagate_max: Optional[int] = None,
    canonical_max: Optional[int] = None,
    random_max: Optional[int] = None,
    debug_checks: Optional[bool] = None,
) -> None:
    """
    Configure cilab settings.

    Args:
        level: Minimum log level ("debug", "info", "warn", "error").
        tag_prefix: Prefix for log tags (default "CILAB").
        max_order: Largest order accepted by make_table.
        propagate_max: Largest order for the propagation enumerator.
        canonical_max: Largest order for canonical_form.
        random_max: Largest order for random_quasigroup.
        debug_checks: Verify preconditions of the O(1) formulas (solve_left).
    """
    global _level, _tag_prefix, _max_order, _propagate_max
    global _canonical_max, _random_max, _debug_checks
    if level is not None:
        _level = LEVEL_NAMES.get(level.lower(), LEVEL_DEBUG)
    if tag_prefix is not None:
        _tag_prefix = tag_prefix
    if max_order is not None:
        _max_order = max_order
    if propagate_max is not None:
        _propagate_max = propagate_max
    if canonical_max is not None:
        _canonical_max = canonical_max
    if random_max is not None:
        _random_max = random_max
    if debug_checks is not None:
        _debug_checks = debug_checks


def reset() -> None:
    """Forget programmatic overrides; env values are read again lazily."""
    global _enabled, _level, _tag_prefix, _max_order, _propagate_max
    global _canonical_max, _random_max, _debug_checks
    _enabled = None
    _level = LEVEL_DEBUG
    _tag_prefix = "CILAB"
    _max_order = None
    _propagate_max = None
    _canonical_max = None
    _random_max = None
    _debug_checks = None


def get_tag_prefix() -> str:
    """Get the current tag prefix."""
    return _tag_prefix


def max_order() -> int:
    return _max_order if _max_order is not None else _env_int("CILAB_MAX_ORDER", DEFAULT_MAX_ORDER)


def propagate_max() -> int:
    if _propagate_max is not None:
        return _propagate_max
    return _env_int("CILAB_PROPAGATE_MAX", DEFAULT_PROPAGATE_MAX)


def canonical_max() -> int:
    if _canonical_max is not None:
        return _canonical_max
    return _env_int("CILAB_CANONICAL_MAX", DEFAULT_CANONICAL_MAX)


def random_max() -> int:
    if _random_max is not None:
        return _random_max
    return _env_int("CILAB_RANDOM_MAX", DEFAULT_RANDOM_MAX)


def debug_checks() -> bool:
    if _debug_checks is not None:
        return _debug_checks
    return _truthy(os.getenv("CILAB_DEBUG", ""))


def default_workers() -> int:
    """Worker count for enumeration; env WORKERS overrides the default of 1."""
    return _env_int("WORKERS", 1)
