"""
Inverse F-nomial matrix and acyclic multi-digraphs
==================================================

The first column of the inverse F-nomial matrix is a signed sum over strict
compositions. Up to sign it counts labeled acyclic alpha-multi digraphs, which
also satisfy an inclusion-exclusion recurrence over in-degree-zero vertices.
"""

from fnomial import (
    dag_count,
    inverse_corner,
    inverse_corner_by_solve,
    inverse_corner_enumerated,
    inverse_triangle,
    lower_triangular_product,
    triangle,
)

inv = inverse_triangle(2, 6)
for row in inv.rows:
    print(" ".join(f"{v:>9}" for v in row))

# Three ways to the corner entry.
n = 9
print(inverse_corner(3, n), inverse_corner_enumerated(3, n), inverse_corner_by_solve(3, n))

# M * M^-1 = I
prod = lower_triangular_product(triangle(4, 10).matrix(), inverse_triangle(4, 10).matrix())
print("identity:", all(prod[i][k] == (i == k) for i in range(11) for k in range(11)))

for alpha in (2, 3):
    print(f"A_{alpha}(n):", [dag_count(alpha, n) for n in range(8)])
    print("  |corner|:", [abs(inverse_corner(alpha, n)) for n in range(8)])
