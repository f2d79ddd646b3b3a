"""The exponential sums A_k(n) three ways, and their closed factorized form.

Run:  python demos/02_exponential_sums.py
"""

from rademacher.expsum import ak_factor, ak_naive, ak_selberg
from rademacher.numctx import NumericContext

ctx = NumericContext(100)
n = 12345
print(f"{'k':>5} {'naive (O(k^2))':>22} {'Selberg':>22}  factorization")
for k in (1, 2, 3, 7, 24, 36, 97, 120, 1001):
    a = ak_naive(k, n, ctx)
    b = ak_selberg(k, n, ctx)
    print(f"{k:>5} {float(a):>22.15f} {float(b):>22.15f}  {ak_factor(k, n)}")

# The factorized form is cheap even when k is large: only modular square
# roots and a handful of cosines are needed.
for k in (10**6 + 3, 2**20 * 3, 999983 * 7):
    f = ak_factor(k, 10**15)
    print(f"A_{k}(10^15) = {float(f):.12f}  =  {f}")

# Many terms vanish outright, and the main sum skips them.
zeros = sum(ak_factor(k, n).zero for k in range(1, 5001))
print(f"\n{zeros} of A_1..A_5000 at n={n} are exactly zero")
