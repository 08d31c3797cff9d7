"""Gelfand-Tsetlin tableaux, integer shifts and the Omega sets.

Rows are stored bottom-up: ``rows[0]`` is the single entry v11 and
``rows[n-1]`` is the top row.  Shift vectors cover rows 1..n-1 only, in the
order (1,1), (2,1), (2,2), (3,1), ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .scalars import Q, Rational, fmt, is_integer, is_nonneg_integer


class ShapeError(ValueError):
    pass


class RankError(ValueError):
    pass


class NotStronglyGeneric(ValueError):
    pass


def shift_index(n: int) -> list[tuple[int, int]]:
    """Canonical (i, j) order of shift coordinates, 1-based."""
    return [(i, j) for i in range(1, n) for j in range(1, i + 1)]


def shift_position(i: int, j: int) -> int:
    return (i - 1) * i // 2 + (j - 1)


@dataclass(frozen=True)
class Tableau:
    n: int
    rows: tuple[tuple[Rational, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        return self.rows[i - 1][j - 1]

    @property
    def top(self) -> tuple[Rational, ...]:
        return self.rows[-1]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[fmt(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return make_tableau(data["n"], data["rows"])

    def __str__(self) -> str:
        lines = [" ".join(fmt(x) for x in row) for row in reversed(self.rows)]
        width = max(len(s) for s in lines)
        return "\n".join(s.center(width) for s in lines)


def make_tableau(n: int, entries: Sequence[Sequence]) -> Tableau:
    if n < 2:
        raise ShapeError("tableaux need n >= 2")
    if len(entries) != n:
        raise ShapeError(f"expected {n} rows, got {len(entries)}")
    rows = []
    for i, row in enumerate(entries, start=1):
        if len(row) != i:
            raise ShapeError(f"row {i} must have {i} entries, got {len(row)}")
        rows.append(tuple(Q(x) for x in row))
    return Tableau(n, tuple(rows))


def tableau_from_vector(v: Sequence) -> Tableau:
    """n = 3 tableau from the flat (v31, v32, v33, v21, v22, v11) used in the sl3 tables."""
    if len(v) != 6:
        raise ShapeError("flat sl3 vector needs six entries")
    v31, v32, v33, v21, v22, v11 = v
    return make_tableau(3, [[v11], [v21, v22], [v31, v32, v33]])


def _row_generic(row: Sequence[Rational]) -> bool:
    return all(not is_integer(a - b) for a, b in itertools.combinations(row, 2))


def is_generic(T: Tableau) -> bool:
    return all(_row_generic(row) for row in T.rows[: T.n - 1])


def is_strongly_generic(T: Tableau) -> bool:
    return all(_row_generic(row) for row in T.rows)


def _require_sl3(T: Tableau) -> None:
    if T.n != 3:
        raise RankError("singularity is only defined here for n = 3")


def is_singular(T: Tableau) -> bool:
    _require_sl3(T)
    return is_integer(T[2, 1] - T[2, 2])


def is_critical(T: Tableau) -> bool:
    _require_sl3(T)
    return T[2, 1] == T[2, 2]


def omega(T: Tableau) -> frozenset[tuple[int, int, int]]:
    return frozenset(
        (r, s, t)
        for r in range(2, T.n + 1)
        for s in range(1, r + 1)
        for t in range(1, r)
        if is_integer(T[r, s] - T[r - 1, t])
    )


def omega_plus(T: Tableau) -> frozenset[tuple[int, int, int]]:
    return frozenset(
        (r, s, t)
        for r in range(2, T.n + 1)
        for s in range(1, r + 1)
        for t in range(1, r)
        if is_nonneg_integer(T[r, s] - T[r - 1, t])
    )


def shift(T: Tableau, z: Sequence[int]) -> Tableau:
    n = T.n
    if len(z) != n * (n - 1) // 2:
        raise ShapeError(f"shift vector for n={n} needs {n * (n - 1) // 2} entries")
    rows = []
    pos = 0
    for i, row in enumerate(T.rows[: n - 1], start=1):
        rows.append(tuple(x + z[pos + j] for j, x in enumerate(row)))
        pos += i
    rows.append(T.top)
    return Tableau(n, tuple(rows))


def permute_rows(T: Tableau, sigma: Sequence[Sequence[int]]) -> Tableau:
    """Row i of the result is ``[rows[i][sigma[i][s]] for s]`` (0-based)."""
    return Tableau(T.n, tuple(tuple(row[p] for p in perm) for row, perm in zip(T.rows, sigma)))


def normalize_row_permutation(T: Tableau) -> tuple[tuple[tuple[int, ...], ...], Tableau]:
    """Permute each row so that integral differences only occur column-wise.

    Works bottom-up: an entry congruent (mod Z) to an entry of the row below
    inherits that entry's column; the remaining entries fill the free columns
    by decreasing value.
    """
    if not is_strongly_generic(T):
        raise NotStronglyGeneric("row normalization needs a strongly generic tableau")
    sigma: list[tuple[int, ...]] = [(0,)]
    placed_below: list[Rational] = [T.rows[0][0]]
    for row in T.rows[1:]:
        size = len(row)
        slots: list[int | None] = [None] * size
        free = []
        for idx, x in enumerate(row):
            col = next((c for c, y in enumerate(placed_below) if is_integer(x - y)), None)
            if col is None:
                free.append(idx)
            else:
                slots[col] = idx
        free.sort(key=lambda idx: row[idx], reverse=True)
        it = iter(free)
        for col in range(size):
            if slots[col] is None:
                slots[col] = next(it)
        perm = tuple(slots)  # type: ignore[arg-type]
        sigma.append(perm)
        placed_below = [row[p] for p in perm]
    sigma_t = tuple(sigma)
    return sigma_t, permute_rows(T, sigma_t)


def betweenness_patterns(top: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Integral patterns m with m[i+1][j] >= m[i][j] >= m[i+1][j+1], top row fixed.

    Yields rows bottom-up, in the classical (unshifted) labelling.
    """
    top = tuple(int(x) for x in top)
    if any(a < b for a, b in zip(top, top[1:])):
        raise ValueError("top row must be weakly decreasing")

    def below(row):
        ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
        return itertools.product(*ranges)

    def rec(row):
        if len(row) == 1:
            yield (row,)
            return
        for lower in below(row):
            for rest in rec(lower):
                yield rest + (row,)

    yield from rec(top)


def pattern_to_tableau(pattern: Sequence[Sequence[int]]) -> Tableau:
    """Classical pattern m -> tableau with v_ij = m_ij - j + 1."""
    rows = [[m - j for j, m in enumerate(row)] for row in pattern]
    return make_tableau(len(pattern), rows)
