"""Exact counting of labeled bipartite, k-coloured and acyclic alpha-multigraphs
through F-nomial coefficients of the tiling sequences ``N(alpha)``."""

from .coefficients import (
    ColorComposition,
    FNomialTriangle,
    colored_total,
    fnomial,
    fnomial_by_definition,
    fnomial_by_recurrence,
    multi_fnomial,
    multi_fnomial_by_definition,
    row_sum,
    triangle,
)
from .compositions import strict_compositions, weak_compositions
from .dags import DagCountTable, dag_count, dag_count_via_inverse, dag_table
from .inversion import (
    InverseTriangle,
    inverse_corner,
    inverse_corner_by_solve,
    inverse_corner_enumerated,
    inverse_entry,
    inverse_triangle,
    lower_triangular_product,
)
from .oracle import (
    BudgetExceeded,
    MultiplicityMatrix,
    count_bipartite_bruteforce,
    count_colored_bruteforce,
    count_dags_bruteforce,
    is_acyclic,
    is_acyclic_by_peeling,
    out_point_census,
)
from .sequences import (
    FSequence,
    SequenceParams,
    coefficient,
    f_factorial,
    falling_f_factorial,
    n_alpha,
)

__version__ = "0.1.0"
