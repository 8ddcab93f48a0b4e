"""Exhaustive generation and counting for the four partition families.

Every count in this package ultimately comes from here: a depth-first search
that adds distinct parts in decreasing order.  Conditions that only involve a
new part and the parts already placed are applied while descending; the ones
that depend on the final number of parts (D0, D2) are checked at each node.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .partitions import (
    ClassVector,
    Partition,
    SemigroupParams,
    _normalise_conditions,
    c_t_part_ok,
    class_vector,
    d0_ok,
    d2_ok,
    d3_pair_ok,
    d_t_pair_ok,
    d_t_part_ok,
    in_W,
    is_in_C_st,
    is_in_C_t,
    is_in_D_st,
    is_in_D_t,
)

FAMILIES = ("C_t", "D_t", "C_st", "D_st")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    t: int
    s: int | None = None
    enabled_conditions: frozenset[str] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in ("C_t", "D_t"):
            if self.t <= 2:
                raise ValueError(f"{self.family} needs t > 2, got {self.t}")
            if self.s is not None:
                raise ValueError(f"{self.family} takes no s parameter")
        else:
            if self.s is None:
                raise ValueError(f"{self.family} needs s")
            SemigroupParams(self.s, self.t)
        if self.enabled_conditions is not None:
            if self.family != "D_st":
                raise ValueError("enabled_conditions only applies to D_st")
            object.__setattr__(
                self, "enabled_conditions", _normalise_conditions(self.enabled_conditions)
            )

    @property
    def params(self) -> SemigroupParams:
        return SemigroupParams(self.s, self.t)

    @property
    def conditions(self) -> frozenset[str]:
        return _normalise_conditions(self.enabled_conditions)

    def contains(self, parts) -> bool:
        """Full (non-incremental) membership test for this family."""
        if self.family == "C_t":
            return is_in_C_t(parts, self.t)
        if self.family == "D_t":
            return is_in_D_t(parts, self.t)
        if self.family == "C_st":
            return is_in_C_st(parts, self.params)
        return is_in_D_st(parts, self.params, self.conditions)

    def without(self, *conditions: str) -> FamilySpec:
        return FamilySpec("D_st", self.t, self.s, self.conditions - set(conditions))


def C_t(t: int) -> FamilySpec:
    return FamilySpec("C_t", t)


def D_t(t: int) -> FamilySpec:
    return FamilySpec("D_t", t)


def C_st(s: int, t: int) -> FamilySpec:
    return FamilySpec("C_st", t, s)


def D_st(s: int, t: int, enabled_conditions: Iterable[str] | None = None) -> FamilySpec:
    conds = None if enabled_conditions is None else frozenset(enabled_conditions)
    return FamilySpec("D_st", t, s, conds)


class _Search:
    """Compiled search rules for one family up to a weight bound."""

    def __init__(self, spec: FamilySpec, max_weight: int):
        self.spec = spec
        t = spec.t
        fam = spec.family
        self.window = 0
        self.pair_ok: Callable[[int, int], bool] | None = None
        self.leaf_ok: Callable[[tuple[int, ...]], bool] | None = None
        self.d2 = False

        if fam == "C_t":
            part_ok = lambda x: c_t_part_ok(x, t)
        elif fam == "D_t":
            part_ok = lambda x: d_t_part_ok(x, t)
            # adjacent-only rule: only the previous part matters
            self.window = 1
            self.pair_ok = lambda x, y: d_t_pair_ok(x, y, t)
        elif fam == "C_st":
            s = spec.s
            part_ok = lambda x: x % s == 0 or x % t == 0
        else:
            s, params, conds = spec.s, spec.params, spec.conditions
            part_ok = (lambda x: in_W(x, params)) if "D1" in conds else (lambda x: True)
            if "D3" in conds:
                self.window = -1
                self.pair_ok = lambda x, y: d3_pair_ok(x, y, s, t)
            self.d2 = "D2" in conds
            if "D0" in conds:
                self.leaf_ok = lambda parts: d0_ok(parts, s, t)

        self.candidates = [x for x in range(max_weight, 0, -1) if part_ok(x)]
        # suffix[i]: total of candidates[i:], for remaining-weight pruning
        suffix = [0] * (len(self.candidates) + 1)
        for i in range(len(self.candidates) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + self.candidates[i]
        self.suffix = suffix

    def _compatible(self, prefix: list[int], y: int) -> bool:
        if self.pair_ok is None or not prefix:
            return True
        t = self.spec.t
        if self.window == 1:
            return self.pair_ok(prefix[-1], y)
        for x in reversed(prefix):
            if x - y > t:
                break
            if not self.pair_ok(x, y):
                return False
        return True

    def walk(self, target: int | None, bound: int) -> Iterator[tuple[int, ...]]:
        """Yield every member of weight == target (or <= bound when target is None)."""
        t = self.spec.t
        cands, suffix = self.candidates, self.suffix
        prefix: list[int] = []
        d2_cap = [10**18]  # stack of max admissible part counts under D2

        def accept(parts: tuple[int, ...]) -> bool:
            return self.leaf_ok is None or self.leaf_ok(parts)

        def rec(start: int, weight: int):
            if target is None or weight == target:
                parts = tuple(prefix)
                if accept(parts):
                    yield parts
                if target is not None:
                    return
            limit = (target if target is not None else bound) - weight
            # first candidate not exceeding the remaining budget
            lo, hi = start, len(cands)
            while lo < hi:
                mid = (lo + hi) // 2
                if cands[mid] > limit:
                    lo = mid + 1
                else:
                    hi = mid
            for i in range(lo, len(cands)):
                if target is not None and suffix[i] < limit:
                    break
                y = cands[i]
                if not self._compatible(prefix, y):
                    continue
                m_new = len(prefix) + 1
                cap = d2_cap[-1]
                if self.d2 and y % t == 0:
                    # y at position m_new needs (total parts) - m_new < y / t
                    cap = min(cap, m_new + (y - 1) // t)
                if m_new > cap:
                    continue
                prefix.append(y)
                d2_cap.append(cap)
                yield from rec(i + 1, weight + y)
                d2_cap.pop()
                prefix.pop()

        yield from rec(0, 0)


def iter_family(n: int, spec: FamilySpec) -> Iterator[Partition]:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _Search(spec, n).walk(n, n):
        yield Partition(parts)


def enumerate_partitions(n: int, spec: FamilySpec) -> list[Partition]:
    """All members of weight n, in lexicographically decreasing order."""
    return list(iter_family(n, spec))


def iter_up_to(max_n: int, spec: FamilySpec) -> Iterator[tuple[int, ...]]:
    """Every member of weight <= max_n, as raw part tuples (single sweep)."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    return _Search(spec, max_n).walk(None, max_n)


def count_table(max_n: int, spec: FamilySpec, method: str = "sweep") -> list[int]:
    """Counts of members of each weight 0..max_n.

    ``method="sweep"`` does one search over all weights; ``"repeat"`` calls
    :func:`enumerate_partitions` once per n.  They must agree.
    """
    if method == "repeat":
        return [sum(1 for _ in iter_family(n, spec)) for n in range(max_n + 1)]
    if method != "sweep":
        raise ValueError(f"unknown method {method!r}")
    table = [0] * (max_n + 1)
    for parts in iter_up_to(max_n, spec):
        table[sum(parts)] += 1
    return table


def refined_counts(n: int, s: int, t: int, side: str) -> dict[ClassVector, int]:
    params = SemigroupParams(s, t)
    spec = C_st(s, t) if side == "C" else D_st(s, t) if side == "D" else None
    if spec is None:
        raise ValueError(f"side must be 'C' or 'D', got {side!r}")
    return dict(Counter(class_vector(p, params, side) for p in iter_family(n, spec)))


def refined_count_tables(max_n: int, s: int, t: int, side: str) -> list[dict[ClassVector, int]]:
    """refined_counts for every n <= max_n from one sweep."""
    params = SemigroupParams(s, t)
    spec = C_st(s, t) if side == "C" else D_st(s, t)
    tables: list[Counter] = [Counter() for _ in range(max_n + 1)]
    for parts in iter_up_to(max_n, spec):
        tables[sum(parts)][class_vector(parts, params, side)] += 1
    return [dict(c) for c in tables]


@dataclass
class D2Witness:
    n: int | None
    partitions: list[Partition]
    counts_checked: int


def find_d2_witness(s: int, t: int, max_n: int) -> D2Witness:
    """Smallest n whose D_st count grows when D2 is switched off.

    Scans n upwards and returns the partitions admitted only without D2.
    """
    relaxed = D_st(s, t).without("D2")
    for n in range(max_n + 1):
        extra = [p for p in iter_family(n, relaxed) if not d2_ok(p.parts, t)]
        if extra:
            return D2Witness(n, extra, n + 1)
    return D2Witness(None, [], max_n + 1)
