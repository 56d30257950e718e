"""Exact combinatorics of F-cobweb posets, F-nomials and the GHW commutator."""
from .chains import (
    DEFAULT_CAP,
    MaximalChain,
    PartitionCertificate,
    count_max_chains,
    count_monotone_max_paths,
    enumerate_max_chains,
    verify_partition_theorem,
)
from .fnomial import AdmissibilityReport, FNomialReport, fnomial, fnomial_table, is_admissible_upto
from .operators import (
    PolyOperator,
    PolySpec,
    ResidualReport,
    check_graves_identity,
    commutator,
    f_derivative_op,
    poly_of_op,
    x_hat_op,
)
from .poset import (
    CobwebPoset,
    InputDag,
    Layer,
    build_cobweb,
    comparability_graph,
    hasse,
    is_cobweb,
    is_graded,
    layer,
    to_dot,
)
from .sequences import FSequence, f_factorial, falling_factorial, permute_prefix, value

__version__ = "0.1.0"
