"""High-precision cos(p pi / q): minimal polynomials versus the generic path.

Run:  python demos/03_cosines.py
"""

import time

import gmpy2

from rademacher.trig import _cos_generic, _cos_minpoly, cos_minpoly, select_cos_path

for n in (3, 5, 7, 12):
    poly = cos_minpoly(n)
    terms = " + ".join(f"{c}x^{i}" for i, c in enumerate(poly.coeffs) if c)
    print(f"n={n:>2}: degree {poly.d}, 2^d * Phi(x) = {terms}")

# At very high precision, Newton iteration on the integer polynomial can beat
# evaluating cos directly.  Which one wins depends on q and the precision.
for p, q, r in ((1, 7, 2000), (5, 24, 20000), (13, 60, 200000)):
    t0 = time.perf_counter()
    a = _cos_minpoly(p, q, r)
    t1 = time.perf_counter()
    b = _cos_generic(p, q, r)
    t2 = time.perf_counter()
    # bare operators on mpfr round to 53 bits, so subtract in a context
    diff = gmpy2.context(precision=r).sub(a, b)
    agree = f"2^{gmpy2.get_exp(diff)}" if diff else "0"
    print(f"cos({p}pi/{q}) at {r} bits: minpoly {t1 - t0:.4f}s, generic {t2 - t1:.4f}s, "
          f"default path '{select_cos_path(q, r)}', difference {agree}")
