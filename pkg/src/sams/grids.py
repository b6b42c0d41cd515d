"""Square grids, their line sums and densities, and the verifiers for
regular sparse anti-magic / sparse magic structure.

Cells are stored 0-based internally; every public coordinate is 1-based,
with (i, j) ranging over [1, n] x [1, n], row-major. The left diagonal is
the set of cells (i, i), the right diagonal the cells (i, n+1-i). A grid
of order n has 2n+2 lines: n rows, n columns and the two diagonals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Square:
    """Immutable n x n grid of non-negative integers."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cells)
        if n < 1:
            raise ValueError("order must be at least 1")
        for row in self.cells:
            if len(row) != n:
                raise ValueError("grid must be square")
            for value in row:
                if value < 0:
                    raise ValueError("cells must be non-negative")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Square":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, n: int) -> "Square":
        return cls(((0,) * n,) * n)

    @property
    def n(self) -> int:
        return len(self.cells)

    def at(self, i: int, j: int) -> int:
        """Cell (i, j), 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"cell ({i}, {j}) outside [1, {self.n}]^2")
        return self.cells[i - 1][j - 1]

    def rotate180(self) -> "Square":
        """The grid turned half a turn: rows and columns both reverse."""
        return Square(tuple(tuple(reversed(row)) for row in reversed(self.cells)))


def add(a: Square, b: Square) -> Square:
    """Cellwise sum of two squares of the same order."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    return Square(
        tuple(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(a.cells, b.cells)
        )
    )


@dataclass(frozen=True)
class SumProfile:
    """The 2n+2 line sums of a square."""

    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    left_diag: int
    right_diag: int

    def line_sums(self) -> tuple[int, ...]:
        """Rows, then columns, then left and right diagonal."""
        return self.row_sums + self.col_sums + (self.left_diag, self.right_diag)

    def sum_set(self) -> set[int]:
        return set(self.line_sums())


@dataclass(frozen=True)
class DensityProfile:
    """Positive-entry counts per line."""

    row_counts: tuple[int, ...]
    col_counts: tuple[int, ...]
    left_diag: int
    right_diag: int

    def line_counts(self) -> tuple[int, ...]:
        return self.row_counts + self.col_counts + (self.left_diag, self.right_diag)

    def __add__(self, other: "DensityProfile") -> "DensityProfile":
        return DensityProfile(
            tuple(a + b for a, b in zip(self.row_counts, other.row_counts)),
            tuple(a + b for a, b in zip(self.col_counts, other.col_counts)),
            self.left_diag + other.left_diag,
            self.right_diag + other.right_diag,
        )


@dataclass(frozen=True)
class Violation:
    """One failed property; `where` pins a line or cell when that helps."""

    prop: str
    detail: str
    where: str | None = None

    def __str__(self) -> str:
        loc = f" [{self.where}]" if self.where else ""
        return f"{self.prop}{loc}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def sum_profile(sq: Square) -> SumProfile:
    n = sq.n
    return SumProfile(
        row_sums=tuple(sum(row) for row in sq.cells),
        col_sums=tuple(sum(sq.cells[i][j] for i in range(n)) for j in range(n)),
        left_diag=sum(sq.cells[i][i] for i in range(n)),
        right_diag=sum(sq.cells[i][n - 1 - i] for i in range(n)),
    )


def density_profile(sq: Square) -> DensityProfile:
    n = sq.n
    return DensityProfile(
        row_counts=tuple(sum(1 for v in row if v > 0) for row in sq.cells),
        col_counts=tuple(
            sum(1 for i in range(n) if sq.cells[i][j] > 0) for j in range(n)
        ),
        left_diag=sum(1 for i in range(n) if sq.cells[i][i] > 0),
        right_diag=sum(1 for i in range(n) if sq.cells[i][n - 1 - i] > 0),
    )


def support(sq: Square) -> frozenset[tuple[int, int]]:
    """1-based coordinates of the positive cells."""
    return frozenset(
        (i + 1, j + 1)
        for i, row in enumerate(sq.cells)
        for j, v in enumerate(row)
        if v > 0
    )


def compatible(a: Square, b: Square) -> bool:
    """True when the two squares have disjoint supports."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    return not (support(a) & support(b))


def _check_density_arg(n: int, d: int) -> None:
    if not 1 <= d < n:
        raise ValueError(f"density must satisfy 1 <= d < n, got d={d}, n={n}")


def _element_violations(sq: Square, lo: int, count: int) -> list[Violation]:
    """Positive cells must be exactly lo, lo+1, ..., lo+count-1, once each."""
    positives = sorted(v for row in sq.cells for v in row if v > 0)
    expected = list(range(lo, lo + count))
    if positives == expected:
        return []
    missing = sorted(set(expected) - set(positives))
    counts = Counter(positives)
    duplicated = sorted(v for v, c in counts.items() if c > 1)
    stray = sorted(set(positives) - set(expected))
    parts = [f"positive cells must be {lo}..{lo + count - 1} once each"]
    if missing:
        parts.append(f"missing {missing}")
    if duplicated:
        parts.append(f"duplicated {duplicated}")
    if stray:
        parts.append(f"out of range {stray}")
    return [Violation("elements", "; ".join(parts))]


def _density_violations(sq: Square, d: int) -> list[Violation]:
    dens = density_profile(sq)
    out = []
    for i, c in enumerate(dens.row_counts, start=1):
        if c != d:
            out.append(
                Violation("density", f"{c} positive entries, want {d}", f"row {i}")
            )
    for j, c in enumerate(dens.col_counts, start=1):
        if c != d:
            out.append(
                Violation("density", f"{c} positive entries, want {d}", f"col {j}")
            )
    if dens.left_diag != d:
        out.append(
            Violation(
                "density",
                f"{dens.left_diag} positive entries, want {d}",
                "left diagonal",
            )
        )
    if dens.right_diag != d:
        out.append(
            Violation(
                "density",
                f"{dens.right_diag} positive entries, want {d}",
                "right diagonal",
            )
        )
    return out


def verify_regular_sams(sq: Square, d: int) -> VerificationReport:
    """Check that `sq` is a regular sparse anti-magic square of density `d`.

    Valid means: the positive cells are exactly 1..n*d once each, the 2n+2
    line sums are pairwise distinct and consecutive, and every line holds
    exactly d positive entries. All three clauses are always checked so a
    failing square reports everything that is wrong with it.
    """
    _check_density_arg(sq.n, d)
    n = sq.n
    violations = _element_violations(sq, 1, n * d)

    sums = sum_profile(sq).line_sums()
    counts = Counter(sums)
    duplicated = sorted(s for s, c in counts.items() if c > 1)
    lo, hi = min(sums), max(sums)
    if duplicated:
        violations.append(
            Violation("sum-set", f"duplicated line sums {duplicated}")
        )
    elif hi - lo != 2 * n + 1:
        violations.append(
            Violation(
                "sum-set",
                f"{2 * n + 2} distinct sums span [{lo}, {hi}], not consecutive",
            )
        )

    violations.extend(_density_violations(sq, d))
    return VerificationReport(tuple(violations))


def verify_regular_sms(sq: Square, d: int, lo: int = 1) -> VerificationReport:
    """Check that `sq` is a regular sparse magic square of density `d`.

    Valid means: the positive cells are exactly lo..lo+n*d-1 once each, all
    2n+2 line sums are equal, and every line holds exactly d positive
    entries. `lo=1` is the plain form; larger `lo` covers shifted copies.
    """
    _check_density_arg(sq.n, d)
    if lo < 1:
        raise ValueError(f"element base must be >= 1, got {lo}")
    n = sq.n
    violations = _element_violations(sq, lo, n * d)

    sums = sum_profile(sq).line_sums()
    distinct = sorted(set(sums))
    if len(distinct) != 1:
        violations.append(
            Violation("constant-sum", f"line sums take several values {distinct}")
        )

    violations.extend(_density_violations(sq, d))
    return VerificationReport(tuple(violations))
