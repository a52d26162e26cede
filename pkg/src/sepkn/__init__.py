"""List coloring with separation on complete graphs: exact tools.

Core objects: :class:`~sepkn.setsys.ListAssignment` (raw color lists),
:class:`~sepkn.setsys.PIVector` (its proper-intersection block sizes) and
the operations deciding (L,b)-colorability, computing separation numbers,
building counter-example families and counting assignment classes.
"""

from .choosability import Verdict, amplitude_ok, brute_force_color, is_abc_choosable
from .colorsym import ColorSymResult, balanced_partition, colorsym, orbit_decompose
from .constructions import (
    ChoosabilityCertificate,
    SymVector,
    cardinality_support,
    choosable_biKn,
    counterexample_high,
    counterexample_low,
    counterexample_xb,
    expand_symmetric,
    support_twins,
)
from .counting import (
    EquivClassCount,
    FitReport,
    closed_form_L3,
    count_classes,
    degree_fit,
    enumerate_vectors,
    tight_count_L3,
)
from .errors import BudgetError, DomainError
from .kernel import basis_ker_a, basis_ker_ac, extreme_points, vec_a, vec_c, vec_psi
from .search import (
    ScanRow,
    SepQuery,
    SepResult,
    conjecture_scan,
    find_counterexample,
    sep,
    sep_symmetric,
)
from .setsys import (
    ListAssignment,
    PIVector,
    amplitude,
    assignment_count,
    list_size,
    pair_intersection,
    pi_vector,
    proper_intersections,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ChoosabilityCertificate",
    "ColorSymResult",
    "DomainError",
    "EquivClassCount",
    "FitReport",
    "ListAssignment",
    "PIVector",
    "ScanRow",
    "SepQuery",
    "SepResult",
    "SymVector",
    "Verdict",
    "amplitude",
    "amplitude_ok",
    "assignment_count",
    "balanced_partition",
    "basis_ker_a",
    "basis_ker_ac",
    "brute_force_color",
    "cardinality_support",
    "choosable_biKn",
    "closed_form_L3",
    "colorsym",
    "conjecture_scan",
    "count_classes",
    "counterexample_high",
    "counterexample_low",
    "counterexample_xb",
    "degree_fit",
    "enumerate_vectors",
    "expand_symmetric",
    "extreme_points",
    "find_counterexample",
    "is_abc_choosable",
    "list_size",
    "orbit_decompose",
    "pair_intersection",
    "pi_vector",
    "proper_intersections",
    "realize",
    "sep",
    "sep_symmetric",
    "support_twins",
    "tight_count_L3",
    "vec_a",
    "vec_c",
    "vec_psi",
]
