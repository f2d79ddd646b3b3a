"""Weaver-type partition congruences p(A k + B) = 0 (mod m).

A tuple (m, l, eps) with m in {13, 17, 19, 23, 29, 31} certifies a family of
progressions; :func:`weaver_test` decides whether (m, l) gives one from a
single evaluation of p at a special point, :func:`expand_tuple` lists the
progressions and :func:`search` scans a range of primes l with a resumable
checkpoint file.
"""

from __future__ import annotations

import json
import os
import random
import re
from collections.abc import Callable, Iterator
from typing import NamedTuple

from .hrr import partition_hrr
from .modarith import is_prime, jacobi, primes_between
from .numctx import DomainError

MODULI = (13, 17, 19, 23, 29, 31)
PROGRESS_EVERY = 64  # primes between progress lines when nothing is found

_PROGRESS = re.compile(r"#\s*last\s*(?:ℓ|l)\s*=\s*(\d+)")


class CongruenceTuple(NamedTuple):
    m: int
    l: int
    eps: int

    def __str__(self) -> str:
        return f"{self.m} {self.l} {self.eps}"

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "l": self.l, "eps": self.eps}, separators=(",", ":"))


class CongruenceProgression(NamedTuple):
    """p(A k + B) = 0 (mod m) for every k >= 0."""

    A: int
    B: int
    m: int


def p_mod(n: int, m: int) -> int:
    """p(n) mod m; the full integer is dropped right away."""
    return partition_hrr(n).value % m


def _check_pair(m: int, l: int) -> None:
    if m not in MODULI:
        raise DomainError(f"m must be one of {MODULI}, got {m}")
    if l < 5 or not is_prime(l):
        raise DomainError(f"l must be a prime >= 5, got {l}")
    if l == m:
        raise DomainError("l must differ from m")


def special_point(m: int, l: int) -> int:
    """m r_m (l^2 - 1)/24 + delta_m, the argument Weaver's test evaluates."""
    delta_m = pow(24, -1, m)
    r_m = -m % 24
    return m * (r_m * (l * l - 1) // 24) + delta_m


def weaver_test(m: int, l: int, evaluate: Callable[[int, int], int] | None = None) -> CongruenceTuple | None:
    """(m, l, eps) if the pair gives a congruence family, else None.

    ``evaluate(n, m)`` must return p(n) mod m; the default sums the
    Rademacher series.
    """
    _check_pair(m, l)
    ev = evaluate or p_mod
    delta_m = pow(24, -1, m)
    r_m = -m % 24
    v = (m - 3) // 2
    sv = -1 if v & 1 else 1
    x = ev(delta_m, m)
    y = ev(special_point(m, l), m)
    f = jacobi(3, l) * jacobi(sv * r_m % l, l)
    u = x * pow(l, v - 1, m) % m
    # t = lambda * x for the Hecke eigenvalue lambda of T(l^2); the families
    # need lambda = omega * l^(v-1), so t is compared with omega * u, not omega
    t = (y + f * u) % m
    for omega in (0, 1, -1):
        if t == omega * u % m:
            return CongruenceTuple(m, l, omega * jacobi(3 * sv % l, l))
    return None


def alpha24(t: CongruenceTuple) -> int:
    """The 1 <= alpha < 24 with m l^(3-|eps|) alpha = -1 (mod 24)."""
    base = t.m * pow(t.l, 3 - abs(t.eps), 24)
    return -pow(base, -1, 24) % 24


def _validate_tuple(t: CongruenceTuple) -> None:
    _check_pair(t.m, t.l)
    if t.eps not in (-1, 0, 1):
        raise DomainError(f"eps must be -1, 0 or 1, got {t.eps}")


def admissible_deltas(t: CongruenceTuple) -> Iterator[int]:
    _validate_tuple(t)
    a = alpha24(t)
    for delta in range(t.l):
        if t.eps == 0:
            if (24 * delta + a) % t.l:
                yield delta
        elif jacobi((24 * delta + a) % t.l, t.l) == t.eps:
            yield delta


def progression(t: CongruenceTuple, delta: int) -> CongruenceProgression:
    step = t.m * t.l ** (3 - abs(t.eps))
    A = step * t.l
    B = (step * alpha24(t) + 1) // 24 + step * delta
    return CongruenceProgression(A, B, t.m)


def expand_tuple(t: CongruenceTuple) -> list[CongruenceProgression]:
    """Every progression the tuple certifies, one per admissible delta."""
    return [progression(t, d) for d in admissible_deltas(t)]


def sample_progressions(t: CongruenceTuple, count: int, rng: random.Random | None = None) -> list[CongruenceProgression]:
    deltas = list(admissible_deltas(t))
    rng = rng or random.Random(f"{t.m}:{t.l}:{t.eps}")
    return [progression(t, d) for d in rng.sample(deltas, min(count, len(deltas)))]


def verify_progression(prog: CongruenceProgression, k_max: int) -> bool:
    """True iff p(A k + B) = 0 (mod m) for 0 <= k <= k_max."""
    if k_max < 0:
        raise DomainError("k_max must be nonnegative")
    return all(p_mod(prog.A * k + prog.B, prog.m) == 0 for k in range(k_max + 1))


def read_checkpoint(path: str | os.PathLike) -> tuple[list[CongruenceTuple], int | None]:
    """Recorded tuples (deduplicated, file order) and the last finished l."""
    tuples: list[CongruenceTuple] = []
    seen = set()
    last = None
    if not os.path.exists(path):
        return tuples, last
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                mt = _PROGRESS.match(line)
                if mt:
                    last = int(mt.group(1))
                continue
            m, l, eps = (int(x) for x in line.split())
            t = CongruenceTuple(m, l, eps)
            if t not in seen:
                seen.add(t)
                tuples.append(t)
    return tuples, last


def _test_one(args):
    m, l = args
    return l, weaver_test(m, l)


def search(
    m: int,
    l_lo: int,
    l_hi: int,
    checkpoint_path: str | os.PathLike,
    jobs: int = 1,
) -> Iterator[CongruenceTuple]:
    """Yield every congruence tuple (m, l, eps) with l prime in [l_lo, l_hi].

    Hits are appended to ``checkpoint_path`` as ``m l eps`` lines, followed
    by ``# last ℓ=<l>`` progress lines.  Rerunning with the same file skips
    the primes already done and re-yields the recorded hits first.  A
    checkpoint file is meant for one m.
    """
    if m not in MODULI:
        raise DomainError(f"m must be one of {MODULI}, got {m}")
    if l_lo > l_hi:
        raise DomainError("empty l range")
    # fail on an unwritable path before any p(n) is computed
    with open(checkpoint_path, "a", encoding="utf-8"):
        pass
    done, last = read_checkpoint(checkpoint_path)
    for t in done:
        if t.m == m and l_lo <= t.l <= l_hi:
            yield t
    start = max(l_lo, 5, last + 1 if last is not None else 0)
    todo = [(m, l) for l in primes_between(start, l_hi) if l != m]
    if not todo:
        return

    pool = None
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.get_context("spawn").Pool(jobs)
        results = pool.imap(_test_one, todo, chunksize=4)
    else:
        results = map(_test_one, todo)
    try:
        with open(checkpoint_path, "a", encoding="utf-8") as fh:
            since = 0
            for l, t in results:
                since += 1
                if t is not None:
                    fh.write(f"{t}\n")
                if t is not None or since >= PROGRESS_EVERY:
                    fh.write(f"# last ℓ={l}\n")
                    fh.flush()
                    since = 0
                if t is not None:
                    yield t
            fh.write(f"# last ℓ={l_hi}\n")
    finally:
        if pool is not None:
            pool.terminate()
