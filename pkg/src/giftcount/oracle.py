"""Brute-force ground truth.

Three enumerators, each built only from the combinatorial definitions and
none of the formulas they are later compared with:

* gamma sequences (the gift-choice sequences of a game whose pool is
  emptied in the order 1, 2, ..., n+1);
* set partitions of {1..k} into blocks of bounded size;
* complete playouts of the party game with distinguishable players and
  gifts.

Each has a literal generator (every object is produced) and a counter. The
counters walk the same depth-first tree but merge subtrees whose remaining
choices are identical, which keeps counts in the 10**19 range tractable.
Tests tie the counters to the literal generators at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import _guards
from .errors import PreconditionError


@dataclass(frozen=True)
class GameConfig:
    sigma: int
    gifts: int

    def __post_init__(self):
        if self.sigma < 0:
            raise PreconditionError("sigma must be nonnegative")
        if self.gifts < 1:
            raise PreconditionError("a game needs at least one gift")


def _check_sigma_n(sigma, n):
    if sigma < 0 or n < 0:
        raise PreconditionError(f"sigma and n must be nonnegative, got {sigma}, {n}")


# -- gamma sequences --------------------------------------------------------


def is_gamma_sequence(entries, sigma: int, n: int) -> bool:
    """Check every structural rule of a gamma sequence for G_sigma(n)."""
    entries = tuple(entries)
    if not entries or entries[-1] != n + 1 or entries.count(n + 1) != 1:
        return False
    if entries[0] != 1:
        return False
    if any(not 1 <= e <= n + 1 for e in entries):
        return False
    first_seen = {}
    for pos, e in enumerate(entries):
        first_seen.setdefault(e, pos)
    for i in range(1, n + 1):
        c = entries.count(i)
        if not 1 <= c <= sigma + 1:
            return False
    for i in range(2, n + 2):
        if first_seen[i] < first_seen[i - 1]:
            return False
    return True


def iter_gamma_sequences(sigma: int, n: int, *, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every gamma sequence for (sigma, n) in depth-first order."""
    _check_sigma_n(sigma, n)
    _guards.check("gamma_list", (sigma + 1) * n, limit)
    counts = [0] * (n + 2)
    seq: list[int] = []

    # Fresh gift (or the final pool gift) first, then steals in gift order.
    def walk(introduced):
        if introduced == n:
            yield tuple(seq) + (n + 1,)
        else:
            g = introduced + 1
            counts[g] += 1
            seq.append(g)
            yield from walk(g)
            seq.pop()
            counts[g] -= 1
        for g in range(1, introduced + 1):
            if counts[g] < sigma + 1:
                counts[g] += 1
                seq.append(g)
                yield from walk(introduced)
                seq.pop()
                counts[g] -= 1

    if n == 0:
        yield (1,)
        return
    counts[1] = 1
    seq.append(1)
    yield from walk(1)


def count_gamma_sequences(sigma: int, n: int, *, limit: int | None = None) -> int:
    """Number of gamma sequences for (sigma, n), i.e. G_sigma(n).

    Same tree as :func:`iter_gamma_sequences`; a node is summarized by how
    many gifts have been introduced and how many of them have been chosen
    c times for each c, because those numbers fix the subtree below it.
    """
    _check_sigma_n(sigma, n)
    _guards.check("gamma_depth", (sigma + 1) * n, limit)
    cap = sigma + 1
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def walk(introduced, hist):
        # hist[c-1] = number of introduced gifts chosen exactly c times
        total = 1 if introduced == n else 0
        for c in range(1, cap):
            mult = hist[c - 1]
            if mult:
                nxt = list(hist)
                nxt[c - 1] -= 1
                nxt[c] += 1
                total += mult * walk(introduced, tuple(nxt))
        if introduced < n:
            nxt = list(hist)
            nxt[0] += 1
            total += walk(introduced + 1, tuple(nxt))
        return total

    start = [0] * cap
    start[0] = 1
    return walk(1, tuple(start))


# -- restricted set partitions ------------------------------------------------


def iter_restricted_partitions(
    parts: int, ground_size: int, max_part: int, *, limit: int | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield partitions of {1..ground_size} into ``parts`` blocks of size <= max_part.

    Blocks are tuples ordered by least element.
    """
    if min(parts, ground_size, max_part) < 0:
        raise PreconditionError("arguments must be nonnegative")
    _guards.check("partition_list", ground_size, limit)
    blocks: list[list[int]] = []

    def walk(j):
        if j > ground_size:
            if len(blocks) == parts:
                yield tuple(tuple(b) for b in blocks)
            return
        if ground_size - j + 1 < parts - len(blocks):
            return
        for b in blocks:
            if len(b) < max_part:
                b.append(j)
                yield from walk(j + 1)
                b.pop()
        if len(blocks) < parts and max_part >= 1:
            blocks.append([j])
            yield from walk(j + 1)
            blocks.pop()

    yield from walk(1)


def count_restricted_partitions(
    parts: int, ground_size: int, max_part: int, *, limit: int | None = None
) -> int:
    """Number of partitions of {1..ground_size} into ``parts`` blocks of size <= max_part.

    Elements are placed one at a time into an existing block or a new one,
    as in :func:`iter_restricted_partitions`; subtrees are merged by the
    multiset of current block sizes.
    """
    if min(parts, ground_size, max_part) < 0:
        raise PreconditionError("arguments must be nonnegative")
    _guards.check("partition_ground", ground_size, limit)
    if max_part == 0:
        return 1 if parts == 0 and ground_size == 0 else 0

    @lru_cache(maxsize=None)
    def walk(placed, hist):
        nblocks = sum(hist)
        if placed == ground_size:
            return 1 if nblocks == parts else 0
        if ground_size - placed < parts - nblocks:
            return 0
        total = 0
        for s in range(1, max_part):
            mult = hist[s - 1]
            if mult:
                nxt = list(hist)
                nxt[s - 1] -= 1
                nxt[s] += 1
                total += mult * walk(placed + 1, tuple(nxt))
        if nblocks < parts:
            nxt = list(hist)
            nxt[0] += 1
            total += walk(placed + 1, tuple(nxt))
        return total

    return walk(0, (0,) * max_part)


# -- the full game --------------------------------------------------------------


@dataclass(frozen=True)
class GameState:
    """Snapshot of a game in progress.

    ``holders[g]`` is the player holding gift g (players are 1..n), or 0
    while the gift is still wrapped in the pool. ``actor`` is the player who
    must move now; ``next_number`` is the next number the host will call.
    """

    holders: tuple[int, ...]
    steals: tuple[int, ...]
    next_number: int
    actor: int

    @property
    def pool(self) -> tuple[int, ...]:
        return tuple(g for g, h in enumerate(self.holders) if h == 0)

    def moves(self, sigma: int) -> Iterator[tuple[str, int]]:
        for g, h in enumerate(self.holders):
            if h == 0:
                yield ("unwrap", g)
            elif self.steals[g] < sigma and h != self.actor:
                yield ("steal", g)

    def play(self, move: tuple[str, int]) -> GameState | None:
        """Apply a move; ``None`` means the move emptied the pool and ended the game."""
        kind, g = move
        holders = list(self.holders)
        if kind == "unwrap":
            holders[g] = self.actor
            if 0 not in holders:
                return None
            return GameState(tuple(holders), self.steals, self.next_number + 1, self.next_number)
        victim = holders[g]
        holders[g] = self.actor
        steals = list(self.steals)
        steals[g] += 1
        return GameState(tuple(holders), tuple(steals), self.next_number, victim)


def initial_state(cfg: GameConfig) -> GameState:
    n = cfg.gifts
    return GameState((0,) * n, (0,) * n, 2, 1)


def count_full_game_playouts(cfg: GameConfig, *, limit: int | None = None) -> int:
    """H_sigma(n): distinct complete playouts with distinguishable players and gifts.

    Player j is the one holding number j. Exhaustive over moves; identical
    states reached by different histories share one count.
    """
    _guards.check("game_gifts", cfg.gifts, limit)
    sigma = cfg.sigma

    @lru_cache(maxsize=None)
    def walk(state: GameState) -> int:
        total = 0
        for move in state.moves(sigma):
            nxt = state.play(move)
            total += 1 if nxt is None else walk(nxt)
        return total

    return walk(initial_state(cfg))


def iter_playouts(cfg: GameConfig, *, limit: int | None = None) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every playout as a tuple of (player, gift) actions, 1-based."""
    _guards.check("game_gifts", cfg.gifts, limit)
    trail: list[tuple[int, int]] = []

    def walk(state):
        for move in state.moves(cfg.sigma):
            trail.append((state.actor, move[1] + 1))
            nxt = state.play(move)
            if nxt is None:
                yield tuple(trail)
            else:
                yield from walk(nxt)
            trail.pop()

    yield from walk(initial_state(cfg))
