"""
Tiling sequences N(alpha)
=========================

The sequence N(alpha) has terms n_F = n * alpha**(n-1). For alpha = 2 these
are the edge counts of the n-dimensional hypercube (OEIS A001787).
"""

from fnomial import FSequence, SequenceParams, coefficient, f_factorial, n_alpha

for alpha in range(1, 5):
    print(f"N({alpha}):", FSequence(SequenceParams.n_alpha(alpha)).terms(10))

# The general family allows alpha != beta and a scale 1_F.
print("x/((1-x)(1-2x)):", [coefficient(SequenceParams(1, 1, 2), n) for n in range(8)])

# Terms split additively: (k+m)_F = alpha^m k_F + alpha^k m_F
k, m, alpha = 3, 4, 3
print(f"{n_alpha(alpha, k + m)} == {alpha**m * n_alpha(alpha, k) + alpha**k * n_alpha(alpha, m)}")

# F-factorials feed the F-nomial definition.
print("F-factorials of N(2):", [f_factorial(2, n) for n in range(6)])
