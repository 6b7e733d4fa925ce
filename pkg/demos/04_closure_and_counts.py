# Climbing from a covexillary permutation to its smooth closure, then counting.
from smoothperm.covexillary import (
    ascent_chain,
    constructed_step,
    min_smooth_above_oracle,
    smooth_closure,
)
from smoothperm.enumeration import count_class, series_indecomposable, series_smooth
from smoothperm.formats import format_perm

t = (5, 2, 4, 3, 6, 1)
print(format_perm(t), "->", format_perm(smooth_closure(t)))
chain = ascent_chain(t)
for u, v in zip(chain, chain[1:]):
    step = constructed_step(u)
    print(f"  T({step.j},{step.k}) {step.case:<8} {format_perm(v)}")

# without covexillarity the least smooth permutation above may not exist
print(min_smooth_above_oracle((3, 4, 1, 2)))

print("smooth:        ", series_smooth(12)[1:])
print("indecomposable:", series_indecomposable(12)[1:])
for cls in ("avoid231", "avoid321"):
    print(cls, [count_class(n, cls) for n in range(1, 11)])
