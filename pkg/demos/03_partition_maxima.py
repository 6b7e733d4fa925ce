# Block subgroups below a permutation: a maximum exists for every partition
# exactly when the permutation is smooth.
from smoothperm.formats import format_partition, format_perm
from smoothperm.partitions import (
    maximal_elements,
    partition_max,
    set_partitions,
    witness_partition,
)
from smoothperm.tables import is_smooth

s = (3, 6, 5, 2, 1, 4)
for P in list(set_partitions(6))[::40]:
    print(format_partition(P).ljust(14), format_perm(partition_max(s, P)))

for t in [(3, 4, 1, 2), (4, 2, 3, 1), (3, 5, 1, 4, 2)]:
    print(format_perm(t), "smooth:", is_smooth(t))
    P = witness_partition(t)
    tops = maximal_elements(t, P)
    print(format_perm(t), "fails on", format_partition(P), "maximal:", [format_perm(u) for u in tops])
