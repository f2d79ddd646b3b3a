"""Weaver's congruence families for p(n) modulo 13, ..., 31.

Run:  python demos/04_congruences.py
"""

import tempfile
from pathlib import Path

from rademacher.congruence import expand_tuple, progression, search, verify_progression, weaver_test

# One p(n) evaluation decides whether (m, l) yields a family of congruences.
t = weaver_test(13, 3797)
print("weaver_test(13, 3797) ->", t)
fams = expand_tuple(t)
print(f"it certifies {len(fams)} progressions; one of them:")
prog = progression(t, 2588)
print(f"  p({prog.A} k + {prog.B}) = 0 (mod {prog.m})")
print("  checked directly for k = 0:", verify_progression(prog, 0))

# A resumable scan over primes l; interrupting and rerunning with the same
# checkpoint file continues where it stopped.
with tempfile.TemporaryDirectory() as tmp:
    cp = Path(tmp) / "m17.txt"
    hits = list(search(17, 5, 400, cp))
    print("\nm = 17, l <= 400:", " ".join(str(h.l) for h in hits))
    print("checkpoint tail:", cp.read_text(encoding="utf-8").splitlines()[-1])
