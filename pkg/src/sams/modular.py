"""Index arithmetic shared by the placement constructions.

Everything here works with the representative of an integer mod n taken in
[1, n] rather than [0, n-1]; `bracket` computes it. The central object is a
cyclic diagonal Latin square whose cell (i, j) holds bracket(2i+j-1, n);
for orders coprime to 6 both of its main diagonals are transversals, and
its column-wise symbol lookup has the closed form `symbol_row`.
"""

from __future__ import annotations

from .grids import Square, VerificationReport, Violation


def bracket(a: int, n: int) -> int:
    """Representative of `a` mod `n` in [1, n]; n itself when n divides a.

    Negative `a` is allowed and resolves to the unique congruent value in
    [1, n], which is what the placement maps need for expressions like
    bracket(i - j - 1, n).
    """
    if n <= 0:
        raise ValueError(f"modulus must be positive, got {n}")
    r = a % n
    return n if r == 0 else r


def require_order(n: int, minimum: int = 5) -> None:
    """Reject orders outside n >= minimum with n = 1 or 5 (mod 6)."""
    if n < minimum or n % 6 not in (1, 5):
        raise ValueError(
            f"order must be >= {minimum} and congruent to 1 or 5 mod 6, got {n}"
        )


def diagonal_latin_square(n: int) -> Square:
    """The order-n Latin square with cell (i, j) = bracket(2i+j-1, n).

    Rows shift by two per step, so rows and columns are automatically
    permutations for odd n; both diagonals are transversals exactly when 3
    does not divide n, hence the n = 1, 5 (mod 6) domain. Cells satisfy the
    half-turn symmetry cell(i, j) + cell(n+1-i, n+1-j) = n+1.
    """
    require_order(n)
    return Square(
        tuple(
            tuple(bracket(2 * i + j - 1, n) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
    )


def symbol_row(n: int, symbol: int, col: int) -> int:
    """Row index where `symbol` appears in column `col` of the Latin square.

    Closed form: the row i solves 2i + col - 1 = symbol (mod n), and 2 is
    invertible mod odd n with inverse (n+1)/2. Agrees with a table lookup in
    diagonal_latin_square(n) for every (symbol, col).
    """
    return bracket((symbol - col + 1) * ((n + 1) // 2), n)


def seed_column(s: int, n: int) -> int:
    """Column placement bijection for seed index s: bracket(m+2s-1, n), m=(n-1)/2."""
    return bracket((n - 1) // 2 + 2 * s - 1, n)


def verify_diagonal_latin(sq: Square) -> VerificationReport:
    """Row/column/diagonal transversal checks over the symbols 1..n."""
    n = sq.n
    full = set(range(1, n + 1))
    violations = []
    for i, row in enumerate(sq.cells, start=1):
        if set(row) != full:
            violations.append(
                Violation("latin-row", "not a permutation of 1..n", f"row {i}")
            )
    for j in range(n):
        column = {sq.cells[i][j] for i in range(n)}
        if column != full:
            violations.append(
                Violation("latin-col", "not a permutation of 1..n", f"col {j + 1}")
            )
    if {sq.cells[i][i] for i in range(n)} != full:
        violations.append(
            Violation("transversal", "symbols repeat", "left diagonal")
        )
    if {sq.cells[i][n - 1 - i] for i in range(n)} != full:
        violations.append(
            Violation("transversal", "symbols repeat", "right diagonal")
        )
    return VerificationReport(tuple(violations))
