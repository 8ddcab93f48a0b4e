"""The stacking bijection C(n)_s^t -> D(n)_s^t and its inverse.

Both directions return the full list of intermediate objects so callers can
audit every stage.  Names follow the construction: ``pi1`` holds the parts not
divisible by t, ``pi2`` the multiples of t, which split at the threshold t*p
into ``pi5`` (above) and ``pi4`` (at or below).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Partition, SemigroupParams, is_in_C_st, is_in_D_st


class BijectionError(RuntimeError):
    """An internal stage of the map produced an inconsistent object."""


@dataclass(frozen=True)
class BijectionTrace:
    s: int
    t: int
    pi: Partition
    pi1: Partition
    pi2: Partition
    pi4: Partition
    pi5: Partition
    pi4_star: tuple[int, ...]
    pi6: Partition
    offsets: tuple[int, ...]
    strings: tuple[tuple[int, ...], ...]
    pi3: Partition
    b_bar: tuple[int, ...] = field(default=())
    a_bar: tuple[int, ...] = field(default=())

    @property
    def p(self) -> int:
        return len(self.pi1)

    @property
    def k(self) -> int:
        return len(self.pi5)

    @property
    def threshold(self) -> int:
        return self.t * self.p

    @property
    def s0(self) -> tuple[int, ...]:
        return self.strings[0]

    @property
    def sf(self) -> tuple[int, ...]:
        return self.strings[-1]

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "pi": list(self.pi),
            "pi1": list(self.pi1),
            "pi2": list(self.pi2),
            "pi4": list(self.pi4),
            "pi5": list(self.pi5),
            "pi4_star": list(self.pi4_star),
            "pi6": list(self.pi6),
            "threshold": self.threshold,
            "offsets": list(self.offsets),
            "strings": [list(x) for x in self.strings],
            "pi3": list(self.pi3),
        }

    def check(self) -> None:
        """Raise BijectionError if any stage breaks a structural invariant."""
        n = self.pi.weight
        t = self.t
        stages = {
            "pi1+pi2": self.pi1.weight + self.pi2.weight,
            "pi5+pi6": self.pi5.weight + self.pi6.weight,
            "pi3": self.pi3.weight,
        }
        for s_ in self.strings:
            stages[f"S={s_}"] = sum(s_) + sum(self.offsets)
        bad = {k: v for k, v in stages.items() if v != n}
        if bad:
            raise BijectionError(f"weight not conserved (n={n}): {bad}")
        rows = self.pi4_star
        if any(r % t for r in rows) or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise BijectionError(f"conjugate rows {rows} not weakly decreasing multiples of {t}")
        if sum(rows) != self.pi4.weight:
            raise BijectionError("conjugate rows do not carry the weight of pi4")
        multiples = tuple(c for c in self.sf if c % t == 0)
        others = tuple(c for c in self.sf if c % t)
        if sorted(multiples, reverse=True) != list(self.b_bar) or others != self.a_bar:
            raise BijectionError("final string does not separate into shifted pi5 and pi6")


def t_fold_conjugate(blocks, t: int) -> tuple[int, ...]:
    """Conjugate a diagram whose columns come in blocks of t.

    ``blocks`` is a weakly decreasing sequence of multiples of t, read as
    stacks of u_i blocks of width t; the result lists the row lengths.  With
    distinct inputs the rows step down by exactly t.  Applying the function to
    its own output recovers the input.
    """
    blocks = tuple(blocks)
    if any(b % t or b <= 0 for b in blocks):
        raise ValueError(f"every part must be a positive multiple of {t}: {blocks}")
    if any(blocks[i] < blocks[i + 1] for i in range(len(blocks) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {blocks}")
    heights = [b // t for b in blocks]
    top = heights[0] if heights else 0
    return tuple(t * sum(1 for u in heights if u >= row) for row in range(1, top + 1))


def _insert_right(string: list[int], value: int) -> list[int]:
    # slides right past every strictly larger entry
    j = 0
    while j < len(string) and string[j] > value:
        j += 1
    return string[:j] + [value] + string[j:]


def forward(pi, s: int, t: int) -> tuple[Partition, BijectionTrace]:
    params = SemigroupParams(s, t)
    pi = pi if isinstance(pi, Partition) else Partition(tuple(pi))
    if not is_in_C_st(pi, params):
        raise ValueError(f"{pi} is not in C_st for s={s}, t={t}")

    pi1 = tuple(x for x in pi if x % t)
    pi2 = tuple(x for x in pi if x % t == 0)
    p = len(pi1)
    threshold = t * p
    pi5 = tuple(x for x in pi2 if x > threshold)
    pi4 = tuple(x for x in pi2 if x <= threshold)
    k = len(pi5)

    rows = t_fold_conjugate(pi4, t)
    if len(rows) > p:
        raise BijectionError(f"conjugate of {pi4} has {len(rows)} rows but p={p}")
    padded = rows + (0,) * (p - len(rows))
    pi6 = tuple(a + r for a, r in zip(pi1, padded))
    if any(pi6[i] <= pi6[i + 1] for i in range(p - 1)):
        raise BijectionError(f"adding rows {rows} to {pi1} broke strict decrease")

    offsets = tuple(t * (p + k - 1 - i) for i in range(p + k))
    b_bar = [b - off for b, off in zip(pi5, offsets)]
    a_bar = [a - off for a, off in zip(pi6, offsets[k:])]

    strings = [tuple(b_bar + a_bar)]
    tail = list(a_bar)
    # the last shifted multiple moves first
    for i in range(k - 1, -1, -1):
        tail = _insert_right(tail, b_bar[i])
        strings.append(tuple(b_bar[:i] + tail))

    final = strings[-1]
    d = tuple(c + off for c, off in zip(final, offsets))
    if any(d[i] <= d[i + 1] for i in range(len(d) - 1)):
        raise BijectionError(f"final string {final} does not give distinct decreasing parts")

    trace = BijectionTrace(
        s=s, t=t, pi=pi,
        pi1=Partition(pi1), pi2=Partition(pi2),
        pi4=Partition(pi4), pi5=Partition(pi5),
        pi4_star=rows, pi6=Partition(pi6),
        offsets=offsets, strings=tuple(strings),
        pi3=Partition(d), b_bar=tuple(b_bar), a_bar=tuple(a_bar),
    )
    trace.check()
    return trace.pi3, trace


def rows_from_residues(pi6, s: int, t: int) -> tuple[int, ...]:
    """Rebuild the conjugate rows from the residues of pi6 mod s.

    Working from the smallest part up, a row keeps the length of the row below
    when consecutive parts agree mod s and grows by t when they differ by t.
    """
    vals = tuple(pi6)
    rows = [0] * len(vals)
    below_val, below_row = 0, 0
    for i in range(len(vals) - 1, -1, -1):
        step = (vals[i] - below_val) % s
        if step == 0:
            rows[i] = below_row
        elif step == t % s:
            rows[i] = below_row + t
        else:
            raise BijectionError(
                f"part {vals[i]} differs from the one below by {step} mod {s}; expected 0 or {t % s}"
            )
        below_val, below_row = vals[i], rows[i]
    return tuple(r for r in rows if r)


def inverse(pi3, s: int, t: int) -> tuple[Partition, BijectionTrace]:
    params = SemigroupParams(s, t)
    pi3 = pi3 if isinstance(pi3, Partition) else Partition(tuple(pi3))
    if not is_in_D_st(pi3, params):
        raise ValueError(f"{pi3} is not in D_st for s={s}, t={t}")

    m = len(pi3)
    offsets = tuple(t * (m - 1 - i) for i in range(m))
    final = tuple(d - off for d, off in zip(pi3, offsets))
    b_bar = sorted((c for c in final if c % t == 0), reverse=True)
    a_bar = [c for c in final if c % t]
    k, p = len(b_bar), len(a_bar)

    pi5 = tuple(b + off for b, off in zip(b_bar, offsets))
    pi6 = tuple(a + off for a, off in zip(a_bar, offsets[k:]))
    threshold = t * p
    if any(b <= threshold for b in pi5):
        raise BijectionError(f"recovered multiples {pi5} not above threshold {threshold}")

    rows = rows_from_residues(pi6, s, t)
    padded = rows + (0,) * (p - len(rows))
    pi1 = tuple(a - r for a, r in zip(pi6, padded))
    if any(x <= 0 or x % s or x % t == 0 for x in pi1):
        raise BijectionError(f"subtracting rows {rows} from {pi6} gave {pi1}")
    pi4 = t_fold_conjugate(rows, t) if rows else ()

    try:
        pi = Partition.from_parts(pi1 + pi4 + pi5)
        trace_pi6 = Partition(pi6)
        trace_pi1 = Partition(pi1)
    except ValueError as exc:
        raise BijectionError(f"reconstruction of {pi3} failed: {exc}") from exc

    strings = [tuple(b_bar + a_bar)]
    # replay the insertions so the trace has the same shape as forward's
    tail = list(a_bar)
    for i in range(k - 1, -1, -1):
        tail = _insert_right(tail, b_bar[i])
        strings.append(tuple(b_bar[:i] + tail))
    if strings[-1] != final:
        raise BijectionError(f"{pi3} is not in the image of the forward map: "
                             f"insertion gives {strings[-1]}, expected {final}")

    trace = BijectionTrace(
        s=s, t=t, pi=pi,
        pi1=trace_pi1, pi2=Partition.from_parts(pi4 + pi5),
        pi4=Partition(pi4), pi5=Partition(pi5),
        pi4_star=rows, pi6=trace_pi6,
        offsets=offsets, strings=tuple(strings),
        pi3=pi3, b_bar=tuple(b_bar), a_bar=tuple(a_bar),
    )
    trace.check()
    return pi, trace
