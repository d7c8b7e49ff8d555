"""
Logging API used across cilab.

Provides: log, log_check, log_error
"""

from typing import Any, Dict, Optional

from ._core import is_enabled
from ._emit import emit


def log(message: str, tag: str = "info", **kwargs: Any) -> None:
    """
    Log a message with optional key-value context.

    Example:
        log("order done", tag="enumerate", order=4, pairs=len(found))
    """
    if not is_enabled():
        return
    data: Dict[str, Any] = {"msg": message}
    if kwargs:
        data["ctx"] = kwargs
    emit(tag, data)


def log_check(condition: bool, message: str, **kwargs: Any) -> bool:
    """
    Runtime check that logs instead of raising. Returns the condition.

    Example:
        log_check(not ambiguous_rows, "several J candidates on a row", rows=ambiguous_rows)
    """
    if not is_enabled():
        return condition
    if not condition:
        data: Dict[str, Any] = {"msg": message, "passed": False}
        if kwargs:
            data["ctx"] = kwargs
        emit("check", data)
    return condition


def log_error(message: str, error: Optional[BaseException] = None, **kwargs: Any) -> None:
    """Log an error with its type and message."""
    if not is_enabled():
        return
    data: Dict[str, Any] = {"msg": message}
    if error is not None:
        data["err"] = type(error).__name__
        data["err_msg"] = str(error)
    if kwargs:
        data["ctx"] = kwargs
    emit("error", data)
