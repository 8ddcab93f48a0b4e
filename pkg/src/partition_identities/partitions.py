"""Partition values, the semigroup W generated by (s, t), and family membership.

Parts are always listed in strictly decreasing order.  The predicates accept
either a :class:`Partition` or any plain sequence of integers; a sequence that
is not strictly decreasing with positive entries is simply not a member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

D_CONDITIONS = frozenset({"D0", "D1", "D2", "D3"})


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not is_strict_partition(parts):
            raise ValueError(f"parts must be positive and strictly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build from parts in any order; duplicates are rejected."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_strict_partition(parts: Sequence[int]) -> bool:
    if any(x <= 0 for x in parts):
        return False
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


@dataclass(frozen=True)
class SemigroupParams:
    """Coprime generators s, t > 1 of the numerical semigroup W = sN + tN."""

    s: int
    t: int
    gaps: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.s < 2 or self.t < 2:
            raise ValueError(f"s and t must both exceed 1, got s={self.s}, t={self.t}")
        if gcd(self.s, self.t) != 1:
            raise ValueError(f"s={self.s} and t={self.t} are not coprime")
        object.__setattr__(self, "gaps", frozenset(_gaps_by_brute_force(self.s, self.t)))

    @property
    def max_gap(self) -> int:
        return (self.s - 1) * (self.t - 1) - 1

    @property
    def st(self) -> int:
        return self.s * self.t


def _gaps_by_brute_force(s: int, t: int) -> set[int]:
    bound = (s - 1) * (t - 1)
    reachable = {h * s + k * t for h in range(bound // s + 1) for k in range(bound // t + 1)}
    return {x for x in range(bound + 1) if x not in reachable}


def gap_set(s: int, t: int) -> frozenset[int]:
    """Return U, the nonnegative integers not of the form hs + kt (h, k >= 0)."""
    return SemigroupParams(s, t).gaps


def in_W(x: int, params: SemigroupParams) -> bool:
    if x < 0:
        return False
    return x > params.max_gap or x not in params.gaps


# -- the single-parameter families (modulo-t Capparelli generalisation) --


def _check_t(t: int) -> None:
    if t <= 2:
        raise ValueError(f"t must exceed 2, got {t}")


def c_t_part_ok(x: int, t: int) -> bool:
    return x > 0 and (x % t == 0 or x % (2 * t) in (t - 1, t + 1))


def d_t_part_ok(x: int, t: int) -> bool:
    return x > 1 and x % t in (0, 1, t - 1)


def d_t_pair_ok(x: int, y: int, t: int) -> bool:
    """Difference rule for two parts x > y of a D_t partition."""
    return x - y >= t + 1 or (x % t == 0 and y % t == 0) or (x + y) % (2 * t) == 0


def is_in_C_t(p: Sequence[int], t: int) -> bool:
    _check_t(t)
    parts = tuple(p)
    return is_strict_partition(parts) and all(c_t_part_ok(x, t) for x in parts)


def is_in_D_t(p: Sequence[int], t: int, all_pairs: bool = False) -> bool:
    """Membership in D(n)_t.

    The difference rule is checked on adjacent parts; ``all_pairs=True``
    checks every pair instead (the two agree, which the test-suite sweeps).
    """
    _check_t(t)
    parts = tuple(p)
    if not is_strict_partition(parts):
        return False
    if not all(d_t_part_ok(x, t) for x in parts):
        return False
    m = len(parts)
    if all_pairs:
        pairs = ((parts[i], parts[j]) for i in range(m) for j in range(i + 1, m))
    else:
        pairs = zip(parts, parts[1:])
    return all(d_t_pair_ok(x, y, t) for x, y in pairs)


# -- the two-parameter (s-rate, t-stack) families --


def is_in_C_st(p: Sequence[int], params: SemigroupParams) -> bool:
    parts = tuple(p)
    s, t = params.s, params.t
    return is_strict_partition(parts) and all(x % s == 0 or x % t == 0 for x in parts)


def d0_f_values(p: Sequence[int], t: int) -> tuple[int, ...]:
    """Shifted values f_1..f_p of the parts not divisible by t.

    Each such part loses t for every multiple of t that sits after it in the
    decreasing order.
    """
    parts = tuple(p)
    m = len(parts)
    idx = [i for i, x in enumerate(parts, start=1) if x % t != 0]
    npos = len(idx)
    out = []
    for j, i in enumerate(idx, start=1):
        # (m - i) parts follow position i, (npos - j) of them are not multiples of t
        out.append(parts[i - 1] - (m - i - (npos - j)) * t)
    return tuple(out)


def d0_ok(parts: Sequence[int], s: int, t: int) -> bool:
    f = d0_f_values(parts, t)
    if not f:
        return True
    allowed = {0, t % s}
    if f[-1] % s not in allowed:
        return False
    return all((f[i] - f[i + 1]) % s in allowed for i in range(len(f) - 1))


def d2_ok(parts: Sequence[int], t: int) -> bool:
    m = len(parts)
    return all(x > t * (m - i) for i, x in enumerate(parts, start=1) if x % t == 0)


def d3_pair_ok(x: int, y: int, s: int, t: int) -> bool:
    """Closeness rule for parts x > y (any positions)."""
    diff = x - y
    if diff >= t + 1:
        return True
    if diff % s != 0 and x % t == 0 and y % t == 0:
        return True
    if diff % s == 0:
        st = s * t
        total = (x + y) % st
        return total != diff % st and total != (-diff) % st
    return False


def d3_ok(parts: Sequence[int], s: int, t: int) -> bool:
    m = len(parts)
    for i in range(m):
        x = parts[i]
        for j in range(i + 1, m):
            if x - parts[j] >= t + 1:
                break
            if not d3_pair_ok(x, parts[j], s, t):
                return False
    return True


def _normalise_conditions(enabled: Iterable[str] | None) -> frozenset[str]:
    if enabled is None:
        return D_CONDITIONS
    enabled = frozenset(enabled)
    unknown = enabled - D_CONDITIONS
    if unknown:
        raise ValueError(f"unknown conditions: {sorted(unknown)}")
    return enabled


def is_in_D_st(
    p: Sequence[int],
    params: SemigroupParams,
    enabled_conditions: Iterable[str] | None = None,
) -> bool:
    """Membership in D(n)_s^t under the enabled subset of D0-D3 (default: all)."""
    conds = _normalise_conditions(enabled_conditions)
    parts = tuple(p)
    if not is_strict_partition(parts):
        return False
    s, t = params.s, params.t
    if "D1" in conds and not all(in_W(x, params) for x in parts):
        return False
    if "D2" in conds and not d2_ok(parts, t):
        return False
    if "D3" in conds and not d3_ok(parts, s, t):
        return False
    if "D0" in conds and not d0_ok(parts, s, t):
        return False
    return True


@dataclass(frozen=True, order=True)
class ClassVector:
    """Residue census (i_1, ..., i_{t-1}; k)."""

    counts: tuple[int, ...]
    k: int

    @property
    def p(self) -> int:
        return sum(self.counts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + f"; {self.k})"


def class_vector(p: Sequence[int], params: SemigroupParams, side: str) -> ClassVector:
    """Classify parts by residue.

    C side: i_h counts parts congruent to hs mod st, and k counts multiples of
    t exceeding t * sum(i_h); smaller multiples of t are left unclassified.
    D side: i_h counts parts congruent to hs mod t, k counts multiples of t.
    Membership is not re-checked.
    """
    s, t = params.s, params.t
    parts = tuple(p)
    counts = [0] * (t - 1)
    if side == "C":
        by_residue = {(h * s) % (s * t): h for h in range(1, t)}
        for x in parts:
            h = by_residue.get(x % (s * t))
            if h is not None:
                counts[h - 1] += 1
        threshold = t * sum(counts)
        k = sum(1 for x in parts if x % t == 0 and x > threshold)
    elif side == "D":
        by_residue = {(h * s) % t: h for h in range(1, t)}
        for x in parts:
            if x % t:
                counts[by_residue[x % t] - 1] += 1
        k = sum(1 for x in parts if x % t == 0)
    else:
        raise ValueError(f"side must be 'C' or 'D', got {side!r}")
    return ClassVector(tuple(counts), k)


def parse_partition(text: str) -> Partition:
    """Parse ``"84,70,66"``; the empty string is the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return Partition(())
    return Partition(tuple(int(x) for x in text.split(",")))
