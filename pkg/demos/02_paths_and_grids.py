# Three pictures of the same smooth permutation.
from smoothperm import (
    essential_set,
    path_from_admissible,
    sigma_from_path,
    table_23,
)
from smoothperm.dyck import all_paths, render_path
from smoothperm.essential import path_from_grid, render_grid

s = (3, 6, 5, 2, 1, 4)
n = len(s)

p = path_from_admissible(table_23(s), n)
print(p)
print(render_path(p))

perm, word = sigma_from_path(p)
print(perm, "word:", " ".join(f"s{i}" for i in word))

E = essential_set(s)
print(sorted(E))
print(render_grid(E, n))
print("grid gives back the path:", path_from_grid(E, n) == p)

# one path per smooth permutation
for n in range(1, 8):
    print(n, sum(1 for _ in all_paths(n)))
