"""Backtracking oracle for regular sparse anti-magic squares.

Independent of the constructions: it enumerates in two phases, first the
0/1 support patterns with exactly d cells per row, column and diagonal,
then the assignments of 1..nd onto a pattern's cells. Patterns are pruned
up to the half-turn symmetry of the axioms (rotating a witness 180 degrees
yields a witness on the rotated pattern, so only the lexicographically
smaller member of each rotation pair is explored). Value assignment prunes
on two facts: completed line sums must stay pairwise distinct, and every
line's attainable sum interval must still fit a common window of 2n+2
consecutive integers.

Nonexistence verdicts are only reported when both phases ran to
completion; running out of time or nodes is its own verdict, never
conflated with nonexistence.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .grids import Square, verify_regular_sams

Pattern = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchConfig:
    """Exploration limits; find_one must be bounded by time or nodes."""

    time_budget: float | None = None
    node_limit: int | None = None
    deterministic: bool = True
    mode: str = "find_one"

    def __post_init__(self) -> None:
        if self.mode not in ("find_one", "exhaust"):
            raise ValueError(f"mode must be find_one or exhaust, got {self.mode!r}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node limit must be positive")
        if (
            self.mode == "find_one"
            and self.time_budget is None
            and self.node_limit is None
        ):
            raise ValueError("find_one mode needs a time budget or a node limit")


@dataclass(frozen=True)
class SearchOutcome:
    """verdict is found, exhausted_none, or budget_exceeded."""

    verdict: str
    witness: Square | None
    nodes: int
    elapsed: float

    def __post_init__(self) -> None:
        if self.verdict == "found" and self.witness is None:
            raise ValueError("found verdict requires a witness")


class _BudgetExceeded(Exception):
    pass


class _Budget:
    def __init__(self, config: SearchConfig):
        self.deadline = (
            time.monotonic() + config.time_budget
            if config.time_budget is not None
            else None
        )
        self.node_limit = config.node_limit
        self.nodes = 0

    def step(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetExceeded
        # Clock checks are comparatively expensive; sample them.
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExceeded


def rotate_pattern(pattern: Pattern, n: int) -> Pattern:
    """Half-turn image: row i becomes row n+1-i with columns mirrored."""
    return tuple(
        tuple(sorted(n - 1 - c for c in row)) for row in reversed(pattern)
    )


def support_patterns(
    n: int, d: int, canonical: bool = True, on_node=None
) -> Iterator[Pattern]:
    """Yield supports with exactly d cells per row, column and diagonal.

    A pattern is a tuple of per-row sorted 0-based column tuples. With
    canonical=True, only the lexicographically smaller member of each
    half-turn rotation pair is yielded (self-symmetric patterns always
    are).
    """
    if not 1 <= d < n:
        raise ValueError(f"density must satisfy 1 <= d < n, got d={d}, n={n}")
    col_counts = [0] * n
    diag_counts = [0, 0]  # left, right
    rows: list[tuple[int, ...]] = []

    def rec(i: int) -> Iterator[Pattern]:
        if i == n:
            pattern = tuple(rows)
            if not canonical or rotate_pattern(pattern, n) >= pattern:
                yield pattern
            return
        rows_left = n - i - 1
        allowed = [c for c in range(n) if col_counts[c] < d]
        if len(allowed) < d:
            return
        # Columns (and diagonal cells) whose deficit equals the remaining
        # row count including this one must be hit now; a larger deficit is
        # already hopeless since each row adds at most one hit per column
        # and per diagonal.
        must = {c for c in allowed if d - col_counts[c] == rows_left + 1}
        if any(d - col_counts[c] > rows_left + 1 for c in range(n)):
            return
        if d - diag_counts[0] > rows_left + 1 or d - diag_counts[1] > rows_left + 1:
            return
        if d - diag_counts[0] == rows_left + 1:
            must.add(i)
        if d - diag_counts[1] == rows_left + 1:
            must.add(n - 1 - i)
        if len(must) > d or not must <= set(allowed):
            return
        free = [c for c in allowed if c not in must]
        base = sorted(must)
        for extra in combinations(free, d - len(must)):
            if on_node is not None:
                on_node()
            combo = tuple(sorted(base + list(extra)))
            d_left = 1 if i in combo else 0
            d_right = 1 if (n - 1 - i) in combo else 0
            if diag_counts[0] + d_left > d or diag_counts[1] + d_right > d:
                continue
            if d - (diag_counts[0] + d_left) > rows_left:
                continue
            if d - (diag_counts[1] + d_right) > rows_left:
                continue
            for c in combo:
                col_counts[c] += 1
            diag_counts[0] += d_left
            diag_counts[1] += d_right
            rows.append(combo)
            yield from rec(i + 1)
            rows.pop()
            diag_counts[0] -= d_left
            diag_counts[1] -= d_right
            for c in combo:
                col_counts[c] -= 1

    yield from rec(0)


def _assign_values(
    n: int,
    d: int,
    pattern: Pattern,
    budget: _Budget,
    rng: random.Random | None,
) -> Square | None:
    """Backtrack over assignments of 1..nd onto the pattern's cells.

    Cells are picked most-constrained-first (fewest unfilled cells on a
    line through them), so lines complete early and the distinctness and
    window prunes bite as soon as possible.
    """
    nd = n * d
    span = 2 * n + 1
    cells = [(i, c) for i in range(n) for c in pattern[i]]
    num_lines = 2 * n + 2
    cell_lines: list[tuple[int, ...]] = []
    for i, c in cells:
        lines = [i, n + c]
        if i == c:
            lines.append(2 * n)
        if i + c == n - 1:
            lines.append(2 * n + 1)
        cell_lines.append(tuple(lines))

    line_left = [d] * num_lines
    line_partial = [0] * num_lines
    completed: dict[int, int] = {}  # line -> sum
    completed_sums: set[int] = set()
    remaining = list(range(1, nd + 1))  # kept sorted
    values = [[0] * n for _ in range(n)]
    unassigned = set(range(len(cells)))

    grand_total = nd * (nd + 1) // 2
    # If the window of sums is [w, w+2n+1], every slot is used once, so the
    # sums add up to (2n+2)w + (n+1)(2n+1); rows alone and columns alone
    # each contribute the grand total, pinning the two diagonal sums to
    # l + r = (2n+2)w + (n+1)(2n+1) - 2*grand_total for each candidate w.
    # Rows also occupy n distinct slots summing to the grand total, which
    # bounds w from both sides.
    slot_sum = (n + 1) * (2 * n + 1)
    rows_min_slots = n * (n - 1) // 2
    rows_max_slots = 3 * n * (n + 1) // 2

    def window_feasible() -> bool:
        total = len(remaining)
        prefix = [0]
        for v in remaining:
            prefix.append(prefix[-1] + v)
        total_sum = prefix[-1]
        max_lo = None
        min_hi = None
        bounds = []
        for line in range(num_lines):
            k = line_left[line]
            lo = line_partial[line] + prefix[k]
            hi = line_partial[line] + total_sum - prefix[total - k]
            bounds.append((lo, hi))
            if max_lo is None or lo > max_lo:
                max_lo = lo
            if min_hi is None or hi < min_hi:
                min_hi = hi
        if max_lo - min_hi > span:
            return False
        diag_lo = bounds[2 * n][0] + bounds[2 * n + 1][0]
        diag_hi = bounds[2 * n][1] + bounds[2 * n + 1][1]
        for w in range(max_lo - span, min_hi + 1):
            if not n * w + rows_min_slots <= grand_total <= n * w + rows_max_slots:
                continue
            need = (2 * n + 2) * w + slot_sum - 2 * grand_total
            if diag_lo <= need <= diag_hi:
                return True
        return False

    def pick_cell() -> int:
        best = -1
        best_key = None
        for idx in unassigned:
            tightest = min(line_left[line] for line in cell_lines[idx])
            key = (tightest, idx)
            if best_key is None or key < best_key:
                best, best_key = idx, key
        return best

    def dfs() -> Square | None:
        budget.step()
        if not unassigned:
            return Square.from_rows(values)
        idx = pick_cell()
        i, c = cells[idx]
        lines = cell_lines[idx]
        unassigned.remove(idx)
        candidates = list(remaining)
        if rng is not None:
            rng.shuffle(candidates)
        for v in candidates:
            finished = []
            ok = True
            for line in lines:
                line_partial[line] += v
                line_left[line] -= 1
                if line_left[line] == 0:
                    s = line_partial[line]
                    if s in completed_sums:
                        ok = False
                    else:
                        completed[line] = s
                        completed_sums.add(s)
                        finished.append(line)
            if ok:
                remaining.remove(v)
                values[i][c] = v
                if window_feasible():
                    result = dfs()
                    if result is not None:
                        return result
                values[i][c] = 0
                # Re-insert keeping the list sorted.
                pos = 0
                while pos < len(remaining) and remaining[pos] < v:
                    pos += 1
                remaining.insert(pos, v)
            for line in finished:
                completed_sums.remove(completed.pop(line))
            for line in lines:
                line_partial[line] -= v
                line_left[line] += 1
        unassigned.add(idx)
        return None

    return dfs()


def search(n: int, d: int, config: SearchConfig) -> SearchOutcome:
    """Run the two-phase search; any found witness passes the verifier."""
    if not 1 <= d < n:
        raise ValueError(f"density must satisfy 1 <= d < n, got d={d}, n={n}")
    budget = _Budget(config)
    rng = None if config.deterministic else random.Random()
    start = time.monotonic()
    try:
        for pattern in support_patterns(n, d, canonical=True, on_node=budget.step):
            witness = _assign_values(n, d, pattern, budget, rng)
            if witness is not None:
                report = verify_regular_sams(witness, d)
                if not report.valid:  # pragma: no cover - internal consistency
                    raise AssertionError(f"search produced an invalid square:\n{report}")
                return SearchOutcome(
                    "found", witness, budget.nodes, time.monotonic() - start
                )
    except _BudgetExceeded:
        return SearchOutcome(
            "budget_exceeded", None, budget.nodes, time.monotonic() - start
        )
    return SearchOutcome(
        "exhausted_none", None, budget.nodes, time.monotonic() - start
    )


def naive_pattern_count(n: int, d: int) -> int:
    """Independent O(n!) enumerator for d=1 pattern counts (test oracle).

    Counts permutation supports with exactly one cell on each diagonal.
    """
    if d != 1:
        raise ValueError("the naive enumerator only handles d=1")
    count = 0
    for perm in permutations(range(n)):
        on_left = sum(1 for i in range(n) if perm[i] == i)
        on_right = sum(1 for i in range(n) if perm[i] == n - 1 - i)
        if on_left == 1 and on_right == 1:
            count += 1
    return count


def cross_check(n: int, d: int, config: SearchConfig | None = None) -> bool | None:
    """Concordance between the constructions and the oracle.

    True when both agree (construction verifies and the oracle finds a
    witness, or a nonexistent refusal meets an exhausted search), False on
    contradiction, None when the oracle ran out of budget before deciding.
    """
    from .compose import generate

    config = config or SearchConfig(time_budget=10.0, mode="find_one")
    outcome = generate(n, d)
    if outcome.ok:
        result = search(n, d, config)
        if result.verdict == "found":
            return True
        return None if result.verdict == "budget_exceeded" else False
    if outcome.refusal == "external_construction":
        result = search(n, d, config)
        if result.verdict == "found":
            return True
        return None if result.verdict == "budget_exceeded" else False
    if outcome.refusal == "nonexistent":
        exhaust = SearchConfig(
            time_budget=config.time_budget,
            node_limit=config.node_limit,
            deterministic=config.deterministic,
            mode="exhaust",
        )
        result = search(n, d, exhaust)
        if result.verdict == "exhausted_none":
            return True
        return None if result.verdict == "budget_exceeded" else False
    raise ValueError(f"({n}, {d}) is outside the oracle's scope: {outcome.message}")
