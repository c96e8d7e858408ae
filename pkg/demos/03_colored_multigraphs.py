"""
k-coloured alpha-multigraphs
============================

A multi F-nomial <n | b_1..b_k> counts labeled alpha-multigraphs whose
vertices are coloured with class sizes b, edges allowed only between
differently coloured vertices. Summing over weak compositions gives the total
number of k-coloured alpha-multigraphs on n vertices.
"""

from fnomial import colored_total, count_colored_bruteforce, multi_fnomial, weak_compositions

comp = (2, 1, 1)
print(f"<4 | {comp}> over N(3):", multi_fnomial(3, comp), "oracle:", count_colored_bruteforce(3, comp))

print("\nweak compositions of 3 into 3 parts, alpha = 2:")
for c in weak_compositions(3, 3):
    print(f"  {c}: {multi_fnomial(2, c)}")
print("total:", colored_total(2, 3, 3))

print("\n3-coloured graphs, n = 0..8:", [colored_total(2, n, 3) for n in range(9)])
