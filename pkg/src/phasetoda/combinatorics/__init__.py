from .partitions import (
    OccupationSequence,
    Partition,
    SkewShape,
    column,
    hook,
    occupation_to_partition,
    partition_to_occupation,
    partitions_in_box,
)
from .paths import (
    LatticePathConfig,
    enumerate_path_configs,
    path_to_pp,
    pp_to_path,
)
from .planepartitions import (
    HalfPlanePartition,
    PlanePartitionBox,
    combine_halves,
    constant_half,
    enumerate_plane_partitions,
    lower_diagonal,
    macmahon_count,
    pp_half_to_tableau,
    tableau_to_pp_half,
    upper_diagonal,
)
from .tableaux import Tableau, enumerate_tableaux
from .weights import (
    PICTURES,
    psi1_support,
    psi2_support,
    weighted_sum_f,
    weighted_sum_g,
    weighted_sum_psi1,
    weighted_sum_psi2,
)

__all__ = [
    "HalfPlanePartition",
    "LatticePathConfig",
    "OccupationSequence",
    "PICTURES",
    "Partition",
    "PlanePartitionBox",
    "SkewShape",
    "Tableau",
    "column",
    "combine_halves",
    "constant_half",
    "enumerate_path_configs",
    "enumerate_plane_partitions",
    "enumerate_tableaux",
    "hook",
    "lower_diagonal",
    "macmahon_count",
    "occupation_to_partition",
    "partition_to_occupation",
    "partitions_in_box",
    "path_to_pp",
    "pp_half_to_tableau",
    "pp_to_path",
    "psi1_support",
    "psi2_support",
    "tableau_to_pp_half",
    "upper_diagonal",
    "weighted_sum_f",
    "weighted_sum_g",
    "weighted_sum_psi1",
    "weighted_sum_psi2",
]
