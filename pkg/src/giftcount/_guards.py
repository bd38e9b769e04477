import os

from .errors import GuardError

ENV_VAR = "GIFTCOUNT_GUARD_MAX"

DEFAULTS = {
    "gamma_depth": 256,  # (sigma+1)*n for memoized gamma-sequence counting
    "gamma_list": 14,  # (sigma+1)*n for literal gamma-sequence listing
    "partition_ground": 18,  # k for restricted partition counting
    "partition_list": 12,  # k for literal partition listing
    "game_gifts": 5,
    "multinomial_n": 8,
    "table_cells": 10_000_000,  # sigma * max_n**2
}


def limit(name, override=None):
    """Effective bound for guard ``name``.

    An explicit ``override`` wins. Otherwise the environment variable can
    only raise a default, never lower it.
    """
    if override is not None:
        return override
    bound = DEFAULTS[name]
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            bound = max(bound, int(raw))
        except ValueError:
            pass
    return bound


def check(name, value, override=None):
    bound = limit(name, override)
    if value > bound:
        raise GuardError(name, value, bound)
