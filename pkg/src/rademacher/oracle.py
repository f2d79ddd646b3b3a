"""p(0), ..., p(n) from Euler's pentagonal number recurrence.

This is the ground truth the Rademacher evaluator is checked against: it uses
nothing but integer additions, over Z or modulo m.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_EXACT_N = 10**6


class ResourceError(RuntimeError):
    """The request would need more memory than the configured bound allows."""


@dataclass
class PartitionVector:
    values: list[int]
    modulus: int | None = None

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def _pentagonal_offsets(n: int) -> tuple[list[int], list[int]]:
    """Generalized pentagonal numbers <= n split by the sign they carry.

    k(3k-1)/2 and k(3k+1)/2 are produced by adding 3k+1 and k to the
    previous value, so no multiplications are needed.
    """
    plus, minus = [], []
    g, k = 1, 1
    while g <= n:
        bucket = plus if k % 2 else minus
        bucket.append(g)
        if g + k <= n:
            bucket.append(g + k)
        g += 3 * k + 1
        k += 1
    return plus, minus


def partition_vector(n: int, modulus: int | None = None, max_n: int = MAX_EXACT_N) -> PartitionVector:
    """p(0..n), exactly or reduced modulo ``modulus``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if modulus is not None and modulus < 1:
        raise ValueError("modulus must be positive")
    if modulus is None and n > max_n:
        raise ResourceError(f"exact vector up to {n} exceeds the bound {max_n}; pass a modulus")
    plus, minus = _pentagonal_offsets(n)
    p = [1] * (n + 1)
    ip = im = 0
    for i in range(1, n + 1):
        while ip < len(plus) and plus[ip] <= i:
            ip += 1
        while im < len(minus) and minus[im] <= i:
            im += 1
        s = sum([p[i - g] for g in plus[:ip]]) - sum([p[i - g] for g in minus[:im]])
        p[i] = s % modulus if modulus is not None else s
    if modulus is not None:
        p[0] %= modulus
    return PartitionVector(p, modulus)
