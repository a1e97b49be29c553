"""Construct and verify d-graceful labelings, difference families and cyclic decompositions."""

__version__ = "0.1.0"

from .constructions import (
    ConstructionFamily,
    ConstructionRequest,
    construct,
    label_cycle_2k_odd_d2,
    label_cycle_4k_d2,
    label_cycle_4k_d4,
    label_ladder_d2,
    label_path,
    label_star,
)
from .decomposition import (
    Decomposition,
    MultipartiteSpec,
    decomposition_summary,
    expand,
    verify_decomposition,
)
from .difference_family import DifferenceFamily, df_from_alpha, df_from_labeling, verify_df
from .errors import BudgetExceeded, NotAdmissible, NotBipartite, VerificationError
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    build_complete,
    build_cycle,
    build_ladder,
    build_path,
    build_star,
)
from .labeling import (
    Labeling,
    admissible_divisors,
    is_relative_difference_set,
    verify_alpha,
    verify_d_graceful,
    verify_rds_view,
)
from .search import SearchConfig, SearchResult, cross_check, exists, search_all
