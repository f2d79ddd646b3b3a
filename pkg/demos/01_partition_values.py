"""Exact p(n) from the Rademacher series, checked against the recurrence.

Run:  python demos/01_partition_values.py [n]
"""

import sys
import time

from rademacher import partition_hrr
from rademacher.oracle import partition_vector

sys.set_int_max_str_digits(0)

# Small values: the series and Euler's recurrence must agree exactly.
vec = partition_vector(2000)
for n in (10, 100, 599, 1000, 2000):
    res = partition_hrr(n)
    print(f"p({n}) = {res.value}  [recurrence agrees: {res.value == vec[n]}]")

# p(599) is divisible by 5^3, one of Ramanujan's congruences.
print("p(599) mod 125 =", partition_hrr(599).value % 125)

# A large value.  The series needs only about sqrt(n) terms; the residual is
# how far the floating-point sum landed from the integer it rounds to.
n = int(float(sys.argv[1])) if len(sys.argv) > 1 else 10**9
t0 = time.perf_counter()
res = partition_hrr(n)
s = str(res.value)
print(f"\np({n}) has {len(s)} digits: {s[:12]}...{s[-12:]}")
print(f"terms {res.terms_used}, residual {res.residual:.2e}, {time.perf_counter() - t0:.2f}s")
