"""Modular residues, array parameters, and the partially filled array model.

Everything downstream (constructions, certification, decompositions,
embeddings) is built on the types here.  All values are immutable after
construction and all functions are pure.

Conventions: rows, columns, and diagonal indices are 1-based; index
arithmetic reduces into {1, ..., n}.  Residues are stored canonically in
[0, v) and displayed by their signed representative in (-v/2, v/2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidParameters, ParseError


@dataclass(frozen=True)
class Residue:
    """An element of the cyclic group of integers modulo ``modulus``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    @classmethod
    def zero(cls, modulus: int) -> "Residue":
        return cls(0, modulus)

    @property
    def signed(self) -> int:
        """The representative in (-v/2, v/2]."""
        if 2 * self.value <= self.modulus:
            return self.value
        return self.value - self.modulus

    def _coerce(self, other: "Residue | int") -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other
        return Residue(other, self.modulus)

    def __add__(self, other: "Residue | int") -> "Residue":
        other = self._coerce(other)
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "Residue | int") -> "Residue":
        other = self._coerce(other)
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other: int) -> "Residue":
        return self._coerce(other) - self

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __mul__(self, scalar: int) -> "Residue":
        return Residue(self.value * scalar, self.modulus)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.signed)


def additive_order(x: Residue) -> int:
    """Least positive multiplier taking ``x`` to zero; equals v / gcd(x, v)."""
    return x.modulus // math.gcd(x.value, x.modulus)


def subgroup_of_order(modulus: int, order: int) -> frozenset:
    """The unique subgroup of the cyclic group mod ``modulus`` with ``order`` elements."""
    if order < 1 or modulus % order != 0:
        raise InvalidParameters(
            f"no subgroup of order {order} in integers mod {modulus}"
        )
    step = modulus // order
    return frozenset(Residue(i * step, modulus) for i in range(order))


def partial_sums(elements: Iterable[Residue]) -> list:
    """Running sums (s_1, ..., s_len) of ``elements``."""
    sums = []
    total: Optional[Residue] = None
    for x in elements:
        total = x if total is None else total + x
        sums.append(total)
    return sums


@dataclass(frozen=True)
class ArrayParams:
    """The parameter block (m, n, h, k, t) of a partially filled array.

    ``m``/``n`` are the row/column counts, ``h``/``k`` the number of filled
    cells per row/column, and ``t`` the order of the excluded subgroup.  The
    entries live modulo ``v = 2nk + t``.
    """

    m: int
    n: int
    h: int
    k: int
    t: int = 1

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidParameters(f"array shape {self.m}x{self.n} invalid")
        if not (1 <= self.h <= self.n):
            raise InvalidParameters(f"need 1 <= h <= n, got h={self.h}, n={self.n}")
        if not (1 <= self.k <= self.m):
            raise InvalidParameters(f"need 1 <= k <= m, got k={self.k}, m={self.m}")
        if self.m * self.h != self.n * self.k:
            raise InvalidParameters(
                f"cell count mismatch: m*h={self.m * self.h} != n*k={self.n * self.k}"
            )
        if self.t < 1 or (2 * self.n * self.k) % self.t != 0:
            raise InvalidParameters(f"t={self.t} does not divide 2nk={2 * self.n * self.k}")

    @property
    def v(self) -> int:
        return 2 * self.n * self.k + self.t

    def excluded_subgroup(self) -> frozenset:
        """The subgroup of order t whose elements may not appear in the array."""
        return subgroup_of_order(self.v, self.t)

    @classmethod
    def square(cls, n: int, k: int, t: int = 1) -> "ArrayParams":
        return cls(m=n, n=n, h=k, k=k, t=t)


@dataclass(frozen=True)
class PFArray:
    """An m x n grid of optional residues together with its parameter block.

    ``cells`` is a tuple of m row tuples, each of n entries that are either
    ``None`` (empty) or a ``Residue`` mod v.  Cell-level legality (no zero,
    nothing from the excluded subgroup) is enforced here; the global fill
    counts and coverage conditions are certified by the verifier instead so
    that malformed inputs can be *reported* rather than rejected.
    """

    params: ArrayParams
    cells: tuple

    def __post_init__(self) -> None:
        p = self.params
        if len(self.cells) != p.m or any(len(row) != p.n for row in self.cells):
            raise InvalidParameters(
                f"grid is not {p.m}x{p.n}: got {len(self.cells)} rows"
            )
        forbidden = p.excluded_subgroup()
        for i, row in enumerate(self.cells, start=1):
            for j, cell in enumerate(row, start=1):
                if cell is None:
                    continue
                if cell.modulus != p.v:
                    raise InvalidParameters(
                        f"cell ({i},{j}) has modulus {cell.modulus}, expected {p.v}"
                    )
                if cell in forbidden:
                    raise InvalidParameters(
                        f"cell ({i},{j}) holds {cell.signed}, an excluded value"
                    )

    @classmethod
    def from_rows(cls, params: ArrayParams, rows: Sequence[Sequence[Optional[int]]]) -> "PFArray":
        """Build from a grid of signed/canonical integers with ``None`` for empty cells."""
        cells = tuple(
            tuple(None if x is None else Residue(x, params.v) for x in row)
            for row in rows
        )
        return cls(params, cells)

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def entry(self, i: int, j: int) -> Optional[Residue]:
        """The cell in row i, column j (1-based), or None if empty."""
        return self.cells[i - 1][j - 1]

    def row_entries(self, i: int) -> tuple:
        """Filled entries of row i, left to right (the natural row ordering)."""
        return tuple(x for x in self.cells[i - 1] if x is not None)

    def col_entries(self, j: int) -> tuple:
        """Filled entries of column j, top to bottom (the natural column ordering)."""
        return tuple(row[j - 1] for row in self.cells if row[j - 1] is not None)

    def filled_cells(self) -> Iterator:
        """Yield (i, j, entry) for every filled cell in row-major order."""
        for i, row in enumerate(self.cells, start=1):
            for j, cell in enumerate(row, start=1):
                if cell is not None:
                    yield i, j, cell

    def entries(self) -> tuple:
        return tuple(x for _, _, x in self.filled_cells())

    def with_cell(self, i: int, j: int, value: "Residue | int | None") -> "PFArray":
        """A copy of this array with cell (i, j) replaced."""
        if isinstance(value, int):
            value = Residue(value, self.params.v)
        grid = [list(row) for row in self.cells]
        grid[i - 1][j - 1] = value
        return PFArray(self.params, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class Skeleton:
    """A fill pattern: which cells of an m x n grid are occupied (1-based)."""

    m: int
    n: int
    filled: frozenset

    def row_count(self, i: int) -> int:
        return sum(1 for (r, _) in self.filled if r == i)

    def col_count(self, j: int) -> int:
        return sum(1 for (_, c) in self.filled if c == j)


def build_skeleton(m: int, n: int, h: int, k: int) -> Skeleton:
    """A fill pattern with h cells per row and k per column.

    The pattern is the union of r = nk / lcm(m, n) cosets of the cyclic
    subgroup of Z_m x Z_n generated by (1, 1); the cosets used are the
    shifts by (0, j) for j = 0..r-1, which are pairwise distinct because
    r <= gcd(m, n).
    """
    ArrayParams(m=m, n=n, h=h, k=k, t=1)  # parameter validation only
    order = math.lcm(m, n)
    r = n * k // order
    filled = set()
    for shift in range(r):
        for step in range(order):
            filled.add((step % m + 1, (step + shift) % n + 1))
    if len(filled) != n * k:
        raise InvalidParameters(
            f"skeleton for ({m},{n},{h},{k}) has {len(filled)} cells, expected {n * k}"
        )
    return Skeleton(m=m, n=n, filled=frozenset(filled))


@dataclass(frozen=True)
class Transversal:
    """n filled cells of a square array, one in each row and each column."""

    cells: tuple


def diagonal_cells(n: int, index: int) -> tuple:
    """Cells of the ``index``-th cyclic diagonal of an n x n grid.

    Diagonal i runs (i,1), (i+1,2), ..., (i-1,n) with rows wrapping mod n.
    """
    return tuple((((index - 1 + j) % n) + 1, j + 1) for j in range(n))


# ---------------------------------------------------------------------------
# Array text format
#
# Line 1: "m n h k t".  Then m lines of n whitespace-separated tokens, each
# a signed integer in (-v/2, v/2] or "." for an empty cell.


def format_array(array: PFArray) -> str:
    p = array.params
    lines = [f"{p.m} {p.n} {p.h} {p.k} {p.t}"]
    for row in array.cells:
        lines.append(" ".join("." if x is None else str(x.signed) for x in row))
    return "\n".join(lines) + "\n"


def parse_array(text: str) -> PFArray:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty array text")
    header = lines[0].split()
    if len(header) != 5:
        raise ParseError(f"header needs 5 fields 'm n h k t', got {lines[0]!r}")
    try:
        m, n, h, k, t = (int(x) for x in header)
    except ValueError as exc:
        raise ParseError(f"non-integer header field in {lines[0]!r}") from exc
    params = ArrayParams(m=m, n=n, h=h, k=k, t=t)
    if len(lines) != 1 + m:
        raise ParseError(f"expected {m} grid rows, got {len(lines) - 1}")
    v = params.v
    forbidden = {x.value for x in params.excluded_subgroup()}
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"row {i} has {len(tokens)} tokens, expected {n}")
        row = []
        for j, token in enumerate(tokens, start=1):
            if token == ".":
                row.append(None)
                continue
            try:
                value = int(token)
            except ValueError as exc:
                raise ParseError(f"bad token {token!r} at ({i},{j})") from exc
            if not (-v / 2 < value <= v / 2):
                raise ParseError(
                    f"token {value} at ({i},{j}) outside (-{v}/2, {v}/2]"
                )
            if value % v in forbidden:
                raise ParseError(
                    f"token {value} at ({i},{j}) is zero or in the excluded subgroup"
                )
            row.append(value)
        rows.append(row)
    return PFArray.from_rows(params, rows)


def read_array(path: "Path | str") -> PFArray:
    return parse_array(Path(path).read_text())


def write_array(array: PFArray, path: "Path | str") -> None:
    Path(path).write_text(format_array(array))
