"""Shared record of acceptance outcomes, printed in the terminal summary."""

import functools

RESULTS: dict[int, tuple[bool, str, str]] = {}


def criterion(number: int, title: str):
    """Record pass/fail of the wrapped test under ``number``."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                msg = str(exc).strip().splitlines()
                RESULTS[number] = (False, title, msg[0][:160] if msg else type(exc).__name__)
                raise
            RESULTS[number] = (True, title, detail or "")

        return wrapper

    return deco
