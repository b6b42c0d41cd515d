"""Symmetric diagonal Kotzig arrays and symmetric forward-diagonals arrays.

A symmetric diagonal Kotzig array is a d x n array whose rows are
permutations of 1..n, whose columns all sum alike, whose cyclic forward
diagonals all sum alike, and whose half-turn opposite cells pair to n+1.
Lifting row i by n*(i-1) (plus an optional offset l) turns one into an
SFD(d, n): same column/diagonal regularity over the consecutive elements
[1+l, nd+l], with point-symmetric pairs summing to nd+1+2l.

d in {3, 4, 5, 6} has a direct base array; larger d stacks two-row half
blocks of the 4-row base around a base array. The forward diagonal through
column j collects cells (i, <j+i-1>_n), wrapping cyclically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grids import VerificationReport, Violation

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RectArray:
    """Immutable d x n array of positive integers, d <= n."""

    rows: Rows

    def __post_init__(self) -> None:
        d = len(self.rows)
        if d < 1:
            raise ValueError("need at least one row")
        n = len(self.rows[0])
        if any(len(row) != n for row in self.rows):
            raise ValueError("rows must have equal length")
        if d > n:
            raise ValueError(f"need d <= n, got {d} x {n}")
        if any(v < 1 for row in self.rows for v in row):
            raise ValueError("cells must be positive")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"column count must be odd and >= 3, got {n}")


def _rows_3(n: int) -> list[tuple[int, ...]]:
    top = tuple(
        n - (j - 1) // 2 if j % 2 else (n + 1 - j) // 2 for j in range(1, n + 1)
    )
    middle = tuple(range(1, n + 1))
    bottom = tuple(n + 1 - top[(n + 1 - j) - 1] for j in range(1, n + 1))
    return [top, middle, bottom]


def _half_top(n: int) -> list[tuple[int, ...]]:
    h = (n + 1) // 2
    first = tuple(
        j if j <= h - 1 else (j + 1 if j <= n - 1 else h) for j in range(1, n + 1)
    )
    second = tuple(
        h if j == 1 else (n + 2 - j if j <= h else n + 1 - j) for j in range(1, n + 1)
    )
    return [first, second]


def _half_bottom(n: int) -> list[tuple[int, ...]]:
    first, second = _half_top(n)
    third = tuple(n + 1 - second[(n + 1 - j) - 1] for j in range(1, n + 1))
    fourth = tuple(n + 1 - first[(n + 1 - j) - 1] for j in range(1, n + 1))
    return [third, fourth]


def _rows_5(n: int) -> list[tuple[int, ...]]:
    h = (n + 1) // 2
    first = tuple((h * (j - 1)) % n + 1 for j in range(1, n + 1))
    descending = tuple(n + 1 - j for j in range(1, n + 1))
    ascending = tuple(range(1, n + 1))
    fifth = tuple(j + h - first[j - 1] for j in range(1, n + 1))
    return [first, descending, ascending, descending, fifth]


def kotzig_base(alpha: int, n: int) -> RectArray:
    """The direct symmetric diagonal Kotzig array with alpha in {3, 4, 5, 6} rows."""
    _check_odd(n)
    if alpha not in (3, 4, 5, 6):
        raise ValueError(f"base row count must be 3..6, got {alpha}")
    if n < alpha:
        raise ValueError(f"need n >= {alpha}, got n={n}")
    if alpha == 3:
        rows = _rows_3(n)
    elif alpha == 4:
        rows = _half_top(n) + _half_bottom(n)
    elif alpha == 5:
        rows = _rows_5(n)
    else:
        rows = _rows_3(n) + _rows_3(n)
    return RectArray(tuple(rows))


def kotzig(d: int, n: int) -> RectArray:
    """Symmetric diagonal Kotzig array of any size d in [3, n], n odd.

    d <= 6 is a base array; d >= 7 is decomposed as d = 4k + alpha with
    alpha in {3, 4, 5, 6}, stacking k top half blocks above the alpha-row
    base and k bottom half blocks below it.
    """
    _check_odd(n)
    if not 3 <= d <= n:
        raise ValueError(f"need 3 <= d <= n, got d={d}, n={n}")
    if d <= 6:
        return kotzig_base(d, n)
    alpha = 3 + (d - 3) % 4
    k = (d - alpha) // 4
    rows = _half_top(n) * k + list(kotzig_base(alpha, n).rows) + _half_bottom(n) * k
    return RectArray(tuple(rows))


def kotzig_alt(d: int, n: int) -> RectArray:
    """Alternative stacking with three-row blocks on the outside.

    Valid for d = 4k + 2 + alpha with k >= 1 and alpha in {3, 4, 5, 6},
    i.e. d >= 9; produces a different array than `kotzig` for the same
    size, equally valid.
    """
    _check_odd(n)
    if not 9 <= d <= n:
        raise ValueError(f"need 9 <= d <= n, got d={d}, n={n}")
    alpha = 3 + (d - 5) % 4
    k = (d - 2 - alpha) // 4
    rows = (
        _rows_3(n)
        + _half_top(n) * (k - 1)
        + list(kotzig_base(alpha, n).rows)
        + _half_bottom(n) * (k - 1)
        + _rows_3(n)
    )
    return RectArray(tuple(rows))


def sfd(t: int, n: int, l: int = 0) -> RectArray:
    """Symmetric forward-diagonals array over [1+l, nt+l].

    Row i of kotzig(t, n) lifted by n*(i-1) + l. Columns and forward
    diagonals all sum to t(nt+1)/2 + t*l; opposite cells pair to nt+1+2l.
    """
    if l < 0:
        raise ValueError(f"offset must be non-negative, got {l}")
    base = kotzig(t, n)
    return RectArray(
        tuple(
            tuple(v + n * i + l for v in row) for i, row in enumerate(base.rows)
        )
    )


def forward_diagonal_sums(arr: RectArray) -> tuple[int, ...]:
    """Sum of each cyclic forward diagonal, indexed by starting column."""
    d, n = arr.d, arr.n
    return tuple(
        sum(arr.rows[i][(j + i) % n] for i in range(d)) for j in range(n)
    )


def _regularity_violations(arr: RectArray) -> list[Violation]:
    """Shared column-sum and forward-diagonal-sum checks."""
    violations = []
    col_sums = sorted({sum(row[j] for row in arr.rows) for j in range(arr.n)})
    if len(col_sums) != 1:
        violations.append(
            Violation("column-sums", f"columns take several sums {col_sums}")
        )
    diag_sums = sorted(set(forward_diagonal_sums(arr)))
    if len(diag_sums) != 1:
        violations.append(
            Violation(
                "diagonal-sums", f"forward diagonals take several sums {diag_sums}"
            )
        )
    return violations


def verify_kotzig(arr: RectArray) -> VerificationReport:
    """Check the four symmetric diagonal Kotzig array properties."""
    d, n = arr.d, arr.n
    violations = []
    full = set(range(1, n + 1))
    for i, row in enumerate(arr.rows, start=1):
        if set(row) != full:
            violations.append(
                Violation(
                    "row-permutation", "not a permutation of 1..n", f"row {i}"
                )
            )
    violations.extend(_regularity_violations(arr))
    for i in range(d):
        for j in range(n):
            pair = arr.rows[i][j] + arr.rows[d - 1 - i][n - 1 - j]
            if pair != n + 1:
                violations.append(
                    Violation(
                        "point-symmetry",
                        f"opposite cells sum to {pair}, want {n + 1}",
                        f"cell ({i + 1}, {j + 1})",
                    )
                )
    return VerificationReport(tuple(violations))


def verify_sfd(arr: RectArray, l: int = 0) -> VerificationReport:
    """Check the four symmetric forward-diagonals array properties."""
    d, n = arr.d, arr.n
    violations = []
    elements = sorted(v for row in arr.rows for v in row)
    expected = list(range(1 + l, d * n + l + 1))
    if elements != expected:
        violations.append(
            Violation(
                "elements",
                f"element set is not {1 + l}..{d * n + l} once each",
            )
        )
    violations.extend(_regularity_violations(arr))
    pair_sums = sorted(
        {
            arr.rows[i][j] + arr.rows[d - 1 - i][n - 1 - j]
            for i in range(d)
            for j in range(n)
        }
    )
    if len(pair_sums) != 1:
        violations.append(
            Violation(
                "point-symmetry",
                f"opposite cells take several pair sums {pair_sums}",
            )
        )
    return VerificationReport(tuple(violations))
