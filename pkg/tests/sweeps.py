"""Cached exhaustive sweeps shared across test modules.

The acceptance tests run first (alphabetical collection order) and
populate these caches; the per-module tests then reuse them. Everything
is keyed by plain tuples so lru_cache applies.
"""

from collections import Counter
from functools import lru_cache

import qstirling as q


def compositions(total):
    """All ordered sequences of positive integers summing to `total`."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def all_mults(max_K):
    """Every multiplicity vector with 1 <= K <= max_K."""
    return [m for K in range(1, max_K + 1) for m in compositions(K)]


@lru_cache(maxsize=None)
def qs_words(mult):
    """The full quasi-Stirling family of a multiset, as a tuple."""
    return tuple(q.enumerate_qs(q.MultisetSpec(mult)))


@lru_cache(maxsize=None)
def stat_hist(mult):
    """Counter over (des, asc, plat) triples of the family."""
    return Counter((s.des, s.asc, s.plat) for s in map(q.stats, qs_words(mult)))


@lru_cache(maxsize=None)
def exc_hist(n, r):
    """Counter over excedance counts of the injective sequences J_{n,r}."""
    return Counter(q.exc(s) for s in q.enumerate_J(n, r))
