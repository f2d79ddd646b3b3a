"""Isolated values of the partition function p(n).

p(n) is summed from the Hardy-Ramanujan-Rademacher series with a rigorous
per-term precision schedule; the exponential sums A_k(n) are factored into a
few cosines of rational multiples of pi.  An Euler-recurrence oracle and a
Weaver congruence driver sit on top.
"""

from .congruence import (
    CongruenceProgression,
    CongruenceTuple,
    expand_tuple,
    search,
    verify_progression,
    weaver_test,
)
from .expsum import TermFactorization, ak_factor, ak_naive, ak_selberg, dedekind_sum
from .hrr import PartitionResult, choose_plan, p, partition_hrr, remainder_bound
from .numctx import DomainError, NumericContext, RangeError
from .oracle import ResourceError, partition_vector
from .trig import cos_minpoly, cos_pi_rational

__all__ = [
    "CongruenceProgression",
    "CongruenceTuple",
    "DomainError",
    "NumericContext",
    "PartitionResult",
    "RangeError",
    "ResourceError",
    "TermFactorization",
    "ak_factor",
    "ak_naive",
    "ak_selberg",
    "choose_plan",
    "cos_minpoly",
    "cos_pi_rational",
    "dedekind_sum",
    "expand_tuple",
    "p",
    "partition_hrr",
    "partition_vector",
    "remainder_bound",
    "search",
    "verify_progression",
    "weaver_test",
]
__version__ = "0.1.0"
