"""k-jagged sequences, the k-staircase, and maximal-block decomposition."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence


def is_jagged(entries: Sequence[int], k: int) -> bool:
    """a_1 > 0 and every consecutive drop is at most k."""
    a = tuple(entries)
    if not a:
        return True
    if a[0] <= 0:
        return False
    return all(a[i + 1] - a[i] >= -k for i in range(len(a) - 1))


def is_strong(entries: Sequence[int], k: int) -> bool:
    """Like :func:`is_jagged` but every later entry is compared with every earlier one."""
    a = tuple(entries)
    if not a:
        return True
    if a[0] <= 0:
        return False
    running_max = a[0]
    for x in a[1:]:
        if x - running_max < -k:
            return False
        running_max = max(running_max, x)
    return True


@dataclass(frozen=True)
class JaggedPartition:
    entries: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        if not is_jagged(self.entries, self.k):
            raise ValueError(f"{self.entries} is not {self.k}-jagged")

    @property
    def strong(self) -> bool:
        return is_strong(self.entries, self.k)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def blocks(self) -> list[MaximalBlock]:
        return maximal_blocks(self.entries, self.k)

    def to_classical(self) -> tuple[int, ...]:
        return add_staircase(self.entries, self.k)


@dataclass(frozen=True)
class MaximalBlock:
    label: int
    entries: tuple[int, ...]


def add_staircase(entries: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(a + i * k for i, a in enumerate(entries))


def remove_staircase(entries: Sequence[int], k: int) -> tuple[int, ...]:
    out = tuple(b - i * k for i, b in enumerate(entries))
    if not is_jagged(out, k):
        raise ValueError(f"removing the {k}-staircase from {tuple(entries)} gives {out}, not {k}-jagged")
    return out


def maximal_blocks(entries: Sequence[int], k: int) -> list[MaximalBlock]:
    """Split a strong k-jagged sequence into its non-empty maximal blocks.

    A block opens at each entry exceeding everything before it and runs until
    the next such entry.
    """
    a = tuple(entries)
    if not is_strong(a, k):
        raise ValueError(f"{a} is not a strong {k}-jagged partition")
    blocks: list[MaximalBlock] = []
    current: list[int] = []
    label = None
    for x in a:
        if label is None or x > label:
            if current:
                blocks.append(MaximalBlock(label, tuple(current)))
            label, current = x, [x]
        else:
            current.append(x)
    if current:
        blocks.append(MaximalBlock(label, tuple(current)))
    return blocks


def block(entries: Sequence[int], k: int, j: int) -> tuple[int, ...]:
    """M_j as a tuple; empty when no block opens at j."""
    for b in maximal_blocks(entries, k):
        if b.label == j:
            return b.entries
    return ()


def random_strong_jagged(rng: random.Random, k: int, max_len: int, max_label: int = 60) -> tuple[int, ...]:
    """Draw increasing block labels, then fill each block from [j-k, j].

    The first entry of each block is its label.
    """
    length = rng.randint(0, max_len)
    out: list[int] = []
    label = 0
    while len(out) < length:
        label = rng.randint(label + 1, label + 1 + max(1, max_label // max(1, max_len)))
        size = rng.randint(1, length - len(out))
        out.append(label)
        out.extend(rng.randint(label - k, label) for _ in range(size - 1))
    return tuple(out)
