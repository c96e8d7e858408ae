"""
F-nomial triangle and bipartite multigraphs
===========================================

<n k> over N(alpha) counts labeled bipartite alpha-multigraphs: choose the
k vertices of one side, then put 0..alpha-1 edges on each of the k(n-k)
cross pairs. The triangle below is built by the Pascal-like recurrence and
checked entrywise against C(n,k) * alpha**(k(n-k)).
"""

from fnomial import count_bipartite_bruteforce, fnomial, row_sum, triangle

t = triangle(2, 7, verify=True)
width = len(str(max(max(r) for r in t.rows)))
for row in t.rows:
    print(" ".join(f"{v:>{width}}" for v in row))

# Brute force agrees on small cases.
print("oracle G(3, 4, 2):", count_bipartite_bruteforce(3, 4, 2), "formula:", fnomial(3, 4, 2))

# Row sums count all 2-coloured graphs (OEIS A047863 for alpha = 2).
print("row sums:", [row_sum(2, n) for n in range(9)])
