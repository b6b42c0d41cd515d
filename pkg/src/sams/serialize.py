"""On-disk formats for squares.

Three formats: a JSON document with embedded metadata (the canonical
interchange form), a bare CSV grid with explicit zeros, and a pretty
fixed-width rendering with zeros left blank. Writers are deterministic:
fixed field order, no timestamps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grids import Square, SumProfile, sum_profile


@dataclass(frozen=True)
class SquareDocument:
    """A square plus the metadata worth keeping next to it."""

    n: int
    d: int
    provenance: str
    cells: tuple[int, ...]  # row-major, length n*n
    sums: SumProfile | None = None

    def __post_init__(self) -> None:
        if len(self.cells) != self.n * self.n:
            raise ValueError(
                f"cells must have length n^2={self.n * self.n}, got {len(self.cells)}"
            )
        if self.sums is not None and self.sums != sum_profile(self.square()):
            raise ValueError("embedded sums do not match the cells")

    @classmethod
    def from_square(
        cls, sq: Square, d: int, provenance: str, include_sums: bool = True
    ) -> "SquareDocument":
        return cls(
            n=sq.n,
            d=d,
            provenance=provenance,
            cells=tuple(v for row in sq.cells for v in row),
            sums=sum_profile(sq) if include_sums else None,
        )

    def square(self) -> Square:
        n = self.n
        return Square(
            tuple(tuple(self.cells[i * n : (i + 1) * n]) for i in range(n))
        )


def to_json(doc: SquareDocument) -> str:
    payload: dict = {
        "n": doc.n,
        "d": doc.d,
        "provenance": doc.provenance,
        "cells": list(doc.cells),
    }
    if doc.sums is not None:
        payload["sums"] = {
            "rows": list(doc.sums.row_sums),
            "cols": list(doc.sums.col_sums),
            "left": doc.sums.left_diag,
            "right": doc.sums.right_diag,
        }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> SquareDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("top-level JSON value must be an object")
    try:
        n = int(payload["n"])
        d = int(payload["d"])
        cells = tuple(int(v) for v in payload["cells"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"document needs integer n, d and a cells list: {exc}")
    sums = None
    if "sums" in payload:
        raw = payload["sums"]
        try:
            sums = SumProfile(
                row_sums=tuple(int(v) for v in raw["rows"]),
                col_sums=tuple(int(v) for v in raw["cols"]),
                left_diag=int(raw["left"]),
                right_diag=int(raw["right"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed sums block: {exc}")
    return SquareDocument(
        n=n,
        d=d,
        provenance=str(payload.get("provenance", "")),
        cells=cells,
        sums=sums,
    )


def to_csv(sq: Square) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in sq.cells) + "\n"


def from_csv(text: str) -> Square:
    rows = []
    lines = [line for line in text.splitlines() if line.strip()]
    for lineno, line in enumerate(lines, start=1):
        try:
            rows.append(tuple(int(field) for field in line.split(",")))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}")
    if not rows:
        raise ValueError("empty grid")
    n = len(rows)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ValueError(
                f"line {lineno}: {len(row)} fields, expected {n} for a square grid"
            )
    return Square(tuple(rows))


def to_pretty(sq: Square) -> str:
    """Fixed-width grid with zeros rendered as blanks."""
    width = max(len(str(v)) for row in sq.cells for v in row)
    lines = [
        " ".join(str(v).rjust(width) if v else " " * width for v in row).rstrip()
        for row in sq.cells
    ]
    return "\n".join(lines) + "\n"


def render(sq: Square, fmt: str, d: int = 0, provenance: str = "") -> str:
    if fmt == "json":
        return to_json(SquareDocument.from_square(sq, d, provenance))
    if fmt == "csv":
        return to_csv(sq)
    if fmt == "pretty":
        return to_pretty(sq)
    raise ValueError(f"unknown format {fmt!r}")


def parse_square_text(text: str) -> tuple[Square, int | None]:
    """Parse either format; returns the square and the document's d if any."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = from_json(text)
        return doc.square(), doc.d
    return from_csv(text), None
