"""Index posets of maximal minors and of all minors of a generic matrix.

``SchubertIndex`` is a maximal minor ``[a_1 ... a_m]`` of an ``m x n``
matrix, ordered componentwise; the set of them is a distributive lattice
under componentwise min (meet) and max (join).  ``BiMinor`` is an arbitrary
minor ``[a_1 ... a_r | b_1 ... b_r]`` ordered by

    [a|b] <= [c|d]  iff  size(a) >= size(c) and a_i <= c_i, b_i <= d_i
                         for i <= size(c).

All indices are 1-based.  Constructors validate and never reorder.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import InputError

Multidegree = tuple  # tuple[int, ...] of 0/1 weights, one per column


@dataclass(frozen=True)
class Ambient:
    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InputError(f"ambient {name} must be a positive integer, got {v!r}")

    def require_schubert(self) -> None:
        if self.m > self.n:
            raise InputError(f"maximal minors need m <= n, got m={self.m}, n={self.n}")

    def __str__(self):
        return f"{self.m}x{self.n}"


def _check_strict(values: Sequence[int], upper: int, what: str) -> tuple[int, ...]:
    out = tuple(values)
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"{what} entries must be integers, got {v!r}")
    if out and (out[0] < 1 or out[-1] > upper):
        raise InputError(f"{what} {list(out)} must lie in [1, {upper}]")
    for x, y in zip(out, out[1:]):
        if x >= y:
            raise InputError(f"{what} {list(out)} is not strictly increasing")
    return out


@dataclass(frozen=True)
class SchubertIndex:
    cols: tuple[int, ...]
    ambient: Ambient

    def __post_init__(self):
        self.ambient.require_schubert()
        cols = _check_strict(self.cols, self.ambient.n, "column tuple")
        if len(cols) != self.ambient.m:
            raise InputError(
                f"a maximal minor of a {self.ambient} matrix needs {self.ambient.m} columns, "
                f"got {len(cols)}"
            )
        object.__setattr__(self, "cols", cols)

    @property
    def m(self) -> int:
        return self.ambient.m

    @property
    def n(self) -> int:
        return self.ambient.n

    def a(self, i: int) -> int:
        """1-based entry access; ``a(m + 1)`` is the sentinel ``n + 1``."""
        if i == self.m + 1:
            return self.n + 1
        if not 1 <= i <= self.m:
            raise IndexError(i)
        return self.cols[i - 1]

    def sort_key(self):
        return self.cols

    def __str__(self):
        return "[" + " ".join(map(str, self.cols)) + "]"


@dataclass(frozen=True)
class BiMinor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    ambient: Ambient

    def __post_init__(self):
        rows = _check_strict(self.rows, self.ambient.m, "row tuple")
        cols = _check_strict(self.cols, self.ambient.n, "column tuple")
        if len(rows) != len(cols):
            raise InputError(f"row tuple {list(rows)} and column tuple {list(cols)} differ in length")
        if not rows:
            raise InputError("a minor needs at least one row and column")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self) -> int:
        return len(self.rows)

    def truncate(self, s: int) -> "BiMinor":
        """The leading ``s``-minor ``[c_1..c_s | d_1..d_s]``."""
        if not 1 <= s <= self.size:
            raise InputError(f"cannot truncate a {self.size}-minor to size {s}")
        return BiMinor(self.rows[:s], self.cols[:s], self.ambient)

    def sort_key(self):
        return (self.size, self.rows, self.cols)

    def __str__(self):
        return "[" + " ".join(map(str, self.rows)) + " | " + " ".join(map(str, self.cols)) + "]"

    def compact(self) -> str:
        return "[" + " ".join(map(str, self.rows)) + "|" + " ".join(map(str, self.cols)) + "]"


def _same_ambient(x, y) -> None:
    if x.ambient != y.ambient:
        raise InputError(f"ambient mismatch: {x.ambient} vs {y.ambient}")


def leq_schubert(xi: SchubertIndex, nu: SchubertIndex) -> bool:
    _same_ambient(xi, nu)
    return all(a <= b for a, b in zip(xi.cols, nu.cols))


def meet_join(xi: SchubertIndex, nu: SchubertIndex) -> tuple[SchubertIndex, SchubertIndex]:
    _same_ambient(xi, nu)
    lo = tuple(min(a, b) for a, b in zip(xi.cols, nu.cols))
    hi = tuple(max(a, b) for a, b in zip(xi.cols, nu.cols))
    return SchubertIndex(lo, xi.ambient), SchubertIndex(hi, xi.ambient)


def leq_bi(alpha: BiMinor, beta: BiMinor) -> bool:
    _same_ambient(alpha, beta)
    s = beta.size
    if alpha.size < s:
        return False
    return all(alpha.rows[i] <= beta.rows[i] and alpha.cols[i] <= beta.cols[i] for i in range(s))


def multidegree(xi: SchubertIndex) -> Multidegree:
    present = set(xi.cols)
    return tuple(1 if j in present else 0 for j in range(1, xi.n + 1))


def top_index(ambient: Ambient) -> SchubertIndex:
    m, n = ambient.m, ambient.n
    return SchubertIndex(tuple(range(n - m + 1, n + 1)), ambient)


def bottom_index(ambient: Ambient) -> SchubertIndex:
    return SchubertIndex(tuple(range(1, ambient.m + 1)), ambient)


def increasing_tuples(length: int, upper: int, lower: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Strictly increasing ``length``-tuples in ``[1, upper]`` with entry ``i`` at
    least ``lower[i]`` (missing bounds default to 1), in lexicographic order."""
    lo = list(lower) + [1] * (length - len(lower))
    buf = [0] * length

    def rec(pos: int, prev: int):
        if pos == length:
            yield tuple(buf)
            return
        # leave room for the remaining entries
        for v in range(max(prev + 1, lo[pos]), upper - (length - pos - 1) + 1):
            buf[pos] = v
            yield from rec(pos + 1, v)

    yield from rec(0, 0)


@lru_cache(maxsize=4096)
def _count_increasing(length: int, upper: int, lower: tuple[int, ...]) -> int:
    # ways[v] = number of valid suffixes when the current entry equals v
    if length == 0:
        return 1
    ways = {v: 1 for v in range(max(1, lower[-1]), upper + 1)}
    for pos in range(length - 2, -1, -1):
        nxt = {}
        acc = 0
        for v in range(upper, 0, -1):
            acc_v = acc
            if v >= lower[pos]:
                nxt[v] = acc_v
            acc += ways.get(v, 0)
        ways = nxt
    return sum(ways.values())


def count_increasing(length: int, upper: int, lower: Sequence[int] = ()) -> int:
    lo = tuple(lower) + (1,) * (length - len(lower))
    return _count_increasing(length, upper, lo)


def enumerate_schubert_interval(ambient: Ambient, gamma: Optional[SchubertIndex] = None) -> list[SchubertIndex]:
    """``Γ(X; γ) = {δ : δ >= γ}`` in lexicographic order (all of Γ(X) if ``gamma`` is None)."""
    ambient.require_schubert()
    lower: tuple[int, ...] = ()
    if gamma is not None:
        if gamma.ambient != ambient:
            raise InputError(f"ambient mismatch: {gamma.ambient} vs {ambient}")
        lower = gamma.cols
    return [SchubertIndex(c, ambient) for c in increasing_tuples(ambient.m, ambient.n, lower)]


def count_schubert_interval(ambient: Ambient, gamma: Optional[SchubertIndex] = None) -> int:
    ambient.require_schubert()
    if gamma is None:
        return comb(ambient.n, ambient.m)
    return count_increasing(ambient.m, ambient.n, gamma.cols)


def _bi_sizes(ambient: Ambient, delta: Optional[BiMinor]) -> range:
    top = min(ambient.m, ambient.n) if delta is None else delta.size
    return range(1, top + 1)


def enumerate_bi_interval(ambient: Ambient, delta: Optional[BiMinor] = None) -> list[BiMinor]:
    """``Δ(X; δ) = {γ : γ >= δ}`` ordered by (size, rows, cols)."""
    if delta is not None and delta.ambient != ambient:
        raise InputError(f"ambient mismatch: {delta.ambient} vs {ambient}")
    out = []
    for s in _bi_sizes(ambient, delta):
        rlo = delta.rows[:s] if delta is not None else ()
        clo = delta.cols[:s] if delta is not None else ()
        col_choices = list(increasing_tuples(s, ambient.n, clo))
        for rows in increasing_tuples(s, ambient.m, rlo):
            for cols in col_choices:
                out.append(BiMinor(rows, cols, ambient))
    return out


def count_bi_interval(ambient: Ambient, delta: Optional[BiMinor] = None) -> int:
    total = 0
    for s in _bi_sizes(ambient, delta):
        rlo = delta.rows[:s] if delta is not None else ()
        clo = delta.cols[:s] if delta is not None else ()
        total += count_increasing(s, ambient.m, rlo) * count_increasing(s, ambient.n, clo)
    return total
