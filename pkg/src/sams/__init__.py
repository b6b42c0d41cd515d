"""Regular sparse anti-magic squares: constructions, verifiers, search.

A sparse anti-magic square of order n and density d holds each of 1..nd in
one cell (zeros elsewhere) so that its n row sums, n column sums and two
diagonal sums form 2n+2 consecutive integers; regular means every line
carries exactly d positive entries. This package constructs them for all
orders n = 1, 5 (mod 6) at densities 2, 4 and [6, n-3], verifies arbitrary
candidates, and ships an independent backtracking oracle for small orders.
"""

from .compose import (
    ConstructionError,
    GenerationOutcome,
    compose,
    compose_shift_anti,
    generate,
    row_slots,
    shift_nonzero,
    sms_embed,
)
from .density2 import (
    ORDER5_GRID,
    place_seed_pair,
    repair_left_diagonal,
    sams_d2,
    seed_pair,
)
from .density4 import sams_d4, seed_quad
from .grids import (
    DensityProfile,
    Square,
    SumProfile,
    VerificationReport,
    Violation,
    add,
    compatible,
    density_profile,
    sum_profile,
    support,
    verify_regular_sams,
    verify_regular_sms,
)
from .kotzig import (
    RectArray,
    forward_diagonal_sums,
    kotzig,
    kotzig_alt,
    kotzig_base,
    sfd,
    verify_kotzig,
    verify_sfd,
)
from .modular import (
    bracket,
    diagonal_latin_square,
    seed_column,
    symbol_row,
    verify_diagonal_latin,
)
from .search import (
    SearchConfig,
    SearchOutcome,
    cross_check,
    search,
    support_patterns,
)
from .serialize import SquareDocument

__all__ = [
    "ConstructionError",
    "DensityProfile",
    "GenerationOutcome",
    "ORDER5_GRID",
    "RectArray",
    "SearchConfig",
    "SearchOutcome",
    "Square",
    "SquareDocument",
    "SumProfile",
    "VerificationReport",
    "Violation",
    "add",
    "bracket",
    "compatible",
    "compose",
    "compose_shift_anti",
    "cross_check",
    "density_profile",
    "diagonal_latin_square",
    "forward_diagonal_sums",
    "generate",
    "kotzig",
    "kotzig_alt",
    "kotzig_base",
    "place_seed_pair",
    "repair_left_diagonal",
    "row_slots",
    "sams_d2",
    "sams_d4",
    "search",
    "seed_column",
    "seed_pair",
    "seed_quad",
    "sfd",
    "shift_nonzero",
    "sms_embed",
    "sum_profile",
    "support",
    "support_patterns",
    "symbol_row",
    "verify_diagonal_latin",
    "verify_kotzig",
    "verify_regular_sams",
    "verify_regular_sms",
    "verify_sfd",
]
