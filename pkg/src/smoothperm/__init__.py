"""
Smooth permutations in S_n and the objects in bijection with them: admissible
sets of transpositions and 3-cycles, decorated Dyck paths and essential sets.
"""
from .admissible import compatible_order, is_admissible, pi
from .covexillary import covex_ascent_step, smooth_closure
from .dyck import DecoratedPath, path_from_admissible, sigma_from_path
from .enumeration import count_class, count_smooth
from .essential import coessential_core, essential_set, sigma_from_grid
from .partitions import partition_max, witness_partition
from .perm import Elem, GeneralCycle, L, R, T, bruhat_leq, inverse, length
from .tables import is_covexillary, is_defined_by_inclusions, is_smooth, table_23, table_D, table_T

__version__ = "0.1.0"

__all__ = [
    "DecoratedPath",
    "Elem",
    "GeneralCycle",
    "L",
    "R",
    "T",
    "bruhat_leq",
    "coessential_core",
    "compatible_order",
    "count_class",
    "count_smooth",
    "covex_ascent_step",
    "essential_set",
    "inverse",
    "is_admissible",
    "is_covexillary",
    "is_defined_by_inclusions",
    "is_smooth",
    "length",
    "partition_max",
    "path_from_admissible",
    "pi",
    "sigma_from_grid",
    "sigma_from_path",
    "smooth_closure",
    "table_23",
    "table_D",
    "table_T",
    "witness_partition",
]
