"""Scroll matrices and the column combinatorics built on top of them.

Column indices are 1-based everywhere; row indices ``j`` of the variables
``x[i,j]`` are 0-based.  A rational normal scroll is fixed by its block
degrees ``n_1 <= ... <= n_d``; ``c`` is their sum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import BarUndefined, IndexOutOfRange, InvalidPartition


@dataclass(frozen=True)
class ScrollSpec:
    n: tuple[int, ...]

    def __post_init__(self):
        if not self.n:
            raise InvalidPartition("partition must be nonempty")
        if any((not isinstance(k, int)) or k < 1 for k in self.n):
            raise InvalidPartition(f"block degrees must be positive integers: {self.n!r}")
        if list(self.n) != sorted(self.n):
            raise InvalidPartition(f"block degrees must be nondecreasing: {self.n!r}")

    @property
    def d(self) -> int:
        return len(self.n)

    @property
    def c(self) -> int:
        return sum(self.n)

    @property
    def grassmann(self) -> bool:
        """True when there are no non-Pluecker quadrics, i.e. ``c < d + 4``."""
        return self.c - self.d < 4

    def __str__(self):
        return ",".join(map(str, self.n))


def make_spec(degrees: Sequence[int]) -> ScrollSpec:
    """Canonicalize a list of block degrees (sorting it) into a ScrollSpec."""
    degrees = list(degrees)
    if not degrees:
        raise InvalidPartition("partition must be nonempty")
    for k in degrees:
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise InvalidPartition(f"block degrees must be positive integers, got {k!r}")
    return ScrollSpec(tuple(sorted(degrees)))


def parse_partition(text: str) -> ScrollSpec:
    """Parse ``"1,2,2,3"`` into a spec."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts if p]
    except ValueError:
        raise InvalidPartition(f"cannot parse partition {text!r}") from None
    return make_spec(values)


def partitions_up_to(cmax: int, cmin: int = 1) -> list[ScrollSpec]:
    """All specs with ``cmin <= c <= cmax``, ordered by c then lexicographically."""
    def rec(remaining, smallest):
        if remaining == 0:
            yield ()
            return
        for k in range(smallest, remaining + 1):
            for rest in rec(remaining - k, k):
                yield (k,) + rest

    out = []
    for c in range(cmin, cmax + 1):
        out.extend(ScrollSpec(n) for n in sorted(rec(c, 1)))
    return out


@dataclass(frozen=True, order=True)
class XVar:
    i: int
    j: int

    def name(self) -> str:
        return f"x[{self.i},{self.j}]"


class MatrixColumn(NamedTuple):
    top: XVar
    bottom: XVar

    @property
    def block(self) -> int:
        return self.top.i


def _column(i: int, j: int) -> MatrixColumn:
    return MatrixColumn(XVar(i, j), XVar(i, j + 1))


def _dump_rows(cols: Sequence[MatrixColumn], breaks: Sequence[int] = ()) -> str:
    rows = []
    for attr in ("top", "bottom"):
        cells = []
        for k, col in enumerate(cols):
            if k in breaks:
                cells.append("|")
            cells.append(getattr(col, attr).name())
        rows.append(" ".join(cells))
    return "\n".join(rows)


def _columns_json(cols: Sequence[MatrixColumn]) -> str:
    data = [{"top": [col.top.i, col.top.j], "bottom": [col.bottom.i, col.bottom.j]} for col in cols]
    return json.dumps(data)


@dataclass(frozen=True)
class MatrixX:
    spec: ScrollSpec
    cols: tuple[MatrixColumn, ...]

    def dump_text(self) -> str:
        breaks, pos = [], 0
        for k in self.spec.n[:-1]:
            pos += k
            breaks.append(pos)
        return _dump_rows(self.cols, breaks)

    def to_json(self) -> str:
        return _columns_json(self.cols)


@dataclass(frozen=True)
class MatrixM:
    spec: ScrollSpec
    cols: tuple[MatrixColumn, ...]

    def top(self, k: int) -> XVar:
        return self.cols[k - 1].top

    def bottom(self, k: int) -> XVar:
        return self.cols[k - 1].bottom

    def dump_text(self) -> str:
        return _dump_rows(self.cols)

    def to_json(self) -> str:
        return _columns_json(self.cols)


@lru_cache(maxsize=None)
def build_matrix_X(spec: ScrollSpec) -> MatrixX:
    cols = tuple(_column(i, j) for i, ni in enumerate(spec.n, 1) for j in range(ni))
    return MatrixX(spec, cols)


@lru_cache(maxsize=None)
def build_matrix_M(spec: ScrollSpec) -> MatrixM:
    """Rearrange the catalecticant columns.

    Non-terminal columns come first, round by round (round j takes column j of
    every block that still has a later column), then the terminal column of
    each block in decreasing block order.
    """
    cols = []
    for j in range(max(spec.n) - 1):
        for i, ni in enumerate(spec.n, 1):
            if ni >= j + 2:
                cols.append(_column(i, j))
    for i in range(spec.d, 0, -1):
        cols.append(_column(i, spec.n[i - 1] - 1))
    return MatrixM(spec, tuple(cols))


@dataclass(frozen=True)
class Tau:
    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    def __call__(self, alpha: int) -> int:
        return self.forward[alpha - 1]

    def inv(self, alpha: int) -> int:
        return self.inverse[alpha - 1]


@lru_cache(maxsize=None)
def tau(spec: ScrollSpec) -> Tau:
    """Permutation sending X-column alpha to the M-column holding the same pair."""
    where = {col: k for k, col in enumerate(build_matrix_M(spec).cols, 1)}
    forward = tuple(where[col] for col in build_matrix_X(spec).cols)
    inverse = [0] * spec.c
    for a, b in enumerate(forward, 1):
        inverse[b - 1] = a
    return Tau(forward, tuple(inverse))


class _ColumnIndex:
    """Lookup tables over M shared by bar, gamma and the term order."""

    def __init__(self, spec: ScrollSpec):
        m = build_matrix_M(spec)
        self.top_at = {col.top: k for k, col in enumerate(m.cols, 1)}
        self.bottom_at = {col.bottom: k for k, col in enumerate(m.cols, 1)}
        self.bars = tuple(self.top_at[m.bottom(a)] for a in range(1, spec.c - spec.d + 1))


@lru_cache(maxsize=None)
def _index(spec: ScrollSpec) -> _ColumnIndex:
    return _ColumnIndex(spec)


def bar(spec: ScrollSpec, alpha: int) -> int:
    """The M-column whose top entry is the bottom entry of column ``alpha``."""
    if not 1 <= alpha <= spec.c - spec.d:
        raise BarUndefined(f"bar({alpha}) undefined: need 1 <= alpha <= c-d = {spec.c - spec.d}")
    return _index(spec).bars[alpha - 1]


def bar_table(spec: ScrollSpec) -> tuple[int, ...]:
    return _index(spec).bars


def column_of_bottom(spec: ScrollSpec, v: XVar) -> int:
    """The unique gamma with ``mu_{2,gamma} = v`` (requires ``v.j >= 1``)."""
    return _index(spec).bottom_at[v]


def column_of_top(spec: ScrollSpec, v: XVar) -> int:
    return _index(spec).top_at[v]


@lru_cache(maxsize=None)
def gamma_and_ell(spec: ScrollSpec, alpha: int) -> tuple[tuple[int, ...], int]:
    """Return ``(gamma_{alpha,1..d}, ell_alpha)``.

    ``gamma_{alpha,i}`` is the first column at or after ``alpha + 2`` drawn from
    block i.  The set of these columns is a run starting at ``alpha + 2`` of
    length ``ell - 1`` followed by a run ending at ``c``.
    """
    c, d = spec.c, spec.d
    if not 1 <= alpha <= c - d - 2:
        raise IndexOutOfRange(f"alpha={alpha} outside [1, c-d-2] = [1, {c - d - 2}]")
    m = build_matrix_M(spec)
    gammas = []
    for i in range(1, d + 1):
        gammas.append(next(k for k in range(alpha + 2, c + 1) if m.cols[k - 1].block == i))
    found = set(gammas)
    ell = 1
    while alpha + ell + 1 in found:
        ell += 1
    expected = set(range(alpha + 2, alpha + ell + 1)) | set(range(c - d + ell, c + 1))
    if found != expected or not 2 <= ell <= d + 1:
        raise AssertionError(f"gamma set {sorted(found)} lacks the run structure (spec {spec}, alpha {alpha})")
    return tuple(gammas), ell
