# The 2-3 table of a permutation, and getting the permutation back from it.
from smoothperm import compatible_order, is_admissible, is_smooth, pi, table_23
from smoothperm.admissible import enumerate_compatible_orders, full_set
from smoothperm.formats import format_elems, format_perm

s = (4, 5, 2, 3, 1)
A = table_23(s)
print(format_perm(s), "smooth:", is_smooth(s))
print(format_elems(A, 5))

# smooth or not, the table can still be admissible
print("admissible:", is_admissible(A))

# 3412 loses T(1,4) and the four 3-cycles through 1 and 4
print("3412 admissible:", is_admissible(table_23((3, 4, 1, 2))))

# a smooth permutation is the ordered product of its transpositions
s = (3, 6, 5, 2, 1, 4)
A = table_23(s)
order = compatible_order(A, 6)
print(" ".join(map(str, order)))
print(format_perm(pi(A, 6)), "==", format_perm(s))

# for the longest element of S_4 there are sixteen such orders
orders = enumerate_compatible_orders(full_set(4))
print(len(orders), "compatible orders")
for o in orders[:3]:
    print("  ", " ".join(map(str, o)))
