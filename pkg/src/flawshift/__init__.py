"""Minimum-change Chung-Feller bijection on Dyck paths with flaws.

The map ``apply_f`` sends a path with e flaws to one with e+1 flaws by
flipping exactly two steps; ``ColumnIterator`` replays repeated
applications in constant time per path.
"""

from .bijections import (
    FlipResult,
    FStepResult,
    apply_f,
    apply_f_classic,
    apply_f_inverse,
    apply_g,
    apply_g_prime,
    apply_h,
    apply_h_prime,
)
from .errors import DomainError, FlawshiftError, NoPredecessor, NoSuccessor, ParseError
from .factors import (
    CycleFactor,
    FactorReport,
    middle_factor,
    middle_levels_double,
    odd_cycle,
    odd_factor,
    path_to_set,
    verify_factor,
)
from .flips import (
    FlipPermutation,
    HillMatching,
    OriginWitness,
    dyck_subpaths,
    hill_matching,
    is_alternating,
    pi_direct,
    pi_recursive,
    recover_origin,
)
from .generator import (
    ColumnIterator,
    FlipDelta,
    column_iterator,
    dyck_paths,
    enumerate_column,
    sawtooth_enumerate,
)
from .oracle import catalan, enumerate_lattice_paths, hamming, verify_chung_feller
from .paths import (
    CanonicalDecomposition,
    LatticePath,
    Step,
    canonical_decomposition,
    count_down_at,
    count_up_at,
    flaws,
    format_path,
    mirror,
    parse_path,
    rev_complement,
    touching_positions,
)

__version__ = "0.1.0"
