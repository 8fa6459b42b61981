"""numba switch.

Set ``TORUSHAM_NO_NUMBA=1`` to run every kernel as plain Python/numpy; the
flag is read once, at import time.
"""
import os

USE_NUMBA = os.environ.get("TORUSHAM_NO_NUMBA", "").strip().lower() in ("", "0", "false", "no")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:
        USE_NUMBA = False

if not USE_NUMBA:

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator
