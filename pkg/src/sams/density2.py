"""Density-2 squares: a 2 x n seed split across the diagonal Latin square.

The seed's two rows carry [1, 2n] so that its column sums and forward
diagonal sums together cover [n+1, 3n+1] minus 2n+1. Dropping seed column s
into Latin-square column seed_column(s), on the rows holding symbols m and
m+2 (m = (n-1)/2), turns seed columns into grid columns and seed forward
diagonals into grid rows. The right diagonal then sums to 3n+2 and the
left to 2n+1 when n = 1 (mod 6); for n = 5 (mod 6) the left diagonal lands
on 2n+3 and a pair of column exchanges repairs it. Order 5 ships as a
fixture because the two exchanges would collide there.
"""

from __future__ import annotations

from .grids import Square
from .modular import require_order, seed_column, symbol_row

# Non-composable one-off for order 5; stored as data, see module docstring.
ORDER5_GRID = Square.from_rows(
    [
        (1, 6, 0, 0, 0),
        (0, 0, 2, 8, 0),
        (5, 0, 0, 0, 3),
        (0, 9, 7, 0, 0),
        (0, 0, 0, 4, 10),
    ]
)


def seed_pair(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The 2 x n seed; rows jointly cover [1, 2n] with each value once."""
    require_order(n)
    m = (n - 1) // 2
    top = tuple(
        n + j if j <= m - 1 else (n + j + 1 if j <= 2 * m else n)
        for j in range(1, n + 1)
    )
    bottom = tuple(
        j if j <= m else (3 * m + 1 if j == m + 1 else j - 1)
        for j in range(1, n + 1)
    )
    return top, bottom


def place_seed_pair(n: int) -> Square:
    """Drop the seed into the Latin square's symbol-m and symbol-(m+2) cells."""
    require_order(n)
    m = (n - 1) // 2
    top, bottom = seed_pair(n)
    grid = [[0] * n for _ in range(n)]
    for s in range(1, n + 1):
        col = seed_column(s, n)
        grid[symbol_row(n, m, col) - 1][col - 1] = top[s - 1]
        grid[symbol_row(n, m + 2, col) - 1][col - 1] = bottom[s - 1]
    return Square.from_rows(grid)


def repair_left_diagonal(sq: Square) -> Square:
    """Exchange columns k <-> k+2 and n+1-k <-> n-1-k, where n = 6k-1.

    A pure column permutation of the whole grid, so row sums and the
    column-sum multiset are untouched; the two support cells sitting on the
    left diagonal move and drop its sum from 2n+3 to 2n+1.
    """
    n = sq.n
    if n % 6 != 5:
        raise ValueError(f"repair applies to orders 5 mod 6 only, got {n}")
    k = (n + 1) // 6
    if k < 2:
        raise ValueError("order 5 is not repairable: the two exchanges collide")
    perm = list(range(n))
    perm[k - 1], perm[k + 1] = perm[k + 1], perm[k - 1]
    perm[n - k], perm[n - k - 2] = perm[n - k - 2], perm[n - k]
    return Square(tuple(tuple(row[p] for p in perm) for row in sq.cells))


def sams_d2(n: int) -> Square:
    """Regular sparse anti-magic square of density 2, sum set [n+1, 3n+2]."""
    require_order(n)
    if n == 5:
        return ORDER5_GRID
    placed = place_seed_pair(n)
    return placed if n % 6 == 1 else repair_left_diagonal(placed)
