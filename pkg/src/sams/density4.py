"""Density-4 squares: a 4 x n seed placed along shifted cyclic diagonals.

The seed rows carry [2n+1, 3n], [2, n+1], [n+2, 2n] plus {1}, and
[3n+1, 4n]; its column sums and forward-diagonal sums together cover
[7n+2, 9n+2] minus 8n+2. Seed cell (i, j) lands on grid cell
(bracket(i-j-1, n), bracket(2j-3, n)), which keeps seed columns in grid
columns and turns seed forward diagonals into grid rows; the landing cells
are exactly those of the Latin square holding symbols n-4, n-2, n and 2.
Both diagonals then complete the sum set to [7n+2, 9n+3].
"""

from __future__ import annotations

from .grids import Square
from .modular import bracket, require_order


def seed_quad(n: int) -> tuple[tuple[int, ...], ...]:
    """The 4 x n seed; rows jointly cover [1, 4n] with each value once."""
    require_order(n, minimum=7)
    m = (n - 1) // 2
    first = tuple(
        2 * n + (j + 1) // 2 if j % 2 else 2 * n + m + 1 + j // 2
        for j in range(1, n + 1)
    )
    second = tuple(n + 2 - j for j in range(1, n + 1))
    third = tuple(
        1 if j == 1 else (n + (j + 1) // 2 if j % 2 else n + m + 1 + j // 2)
        for j in range(1, n + 1)
    )
    fourth = tuple(4 * n + 1 - j for j in range(1, n + 1))
    return first, second, third, fourth


def sams_d4(n: int) -> Square:
    """Regular sparse anti-magic square of density 4, sum set [7n+2, 9n+3]."""
    require_order(n, minimum=7)
    rows = seed_quad(n)
    grid = [[0] * n for _ in range(n)]
    for i in range(1, 5):
        for j in range(1, n + 1):
            r = bracket(i - j - 1, n)
            c = bracket(2 * j - 3, n)
            grid[r - 1][c - 1] = rows[i - 1][j - 1]
    return Square.from_rows(grid)
