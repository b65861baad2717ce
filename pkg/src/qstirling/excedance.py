"""Injective partial self-maps, excedances, and the path-cycle normal form.

A PartialInj stores a sequence of d distinct values from 1..n and reads
it as an injection i -> values[i-1] from {1..d} into {1..n}, d < n.
Its functional graph splits into paths, which leave the domain through
an element larger than d, and cycles. The normal form writes each path
from its start to that terminal, paths sorted by increasing terminal,
and each cycle from its smallest element, cycles sorted by decreasing
smallest element.

chi and delta recode quasi-Stirling words whose only repeated value is
the largest respectively the smallest one into such injections, turning
ascents respectively descents into excedances plus one.
"""

from itertools import permutations
from typing import NamedTuple

from .core import complement, is_quasi_stirling, word_spec


class PartialInj:
    __slots__ = ("n", "values")

    def __init__(self, n, values):
        values = tuple(values)
        if n < 1:
            raise ValueError("codomain size must be positive")
        if len(values) >= n:
            raise ValueError(
                "domain length %d must be smaller than the codomain size %d"
                % (len(values), n)
            )
        for v in values:
            if not 1 <= v <= n:
                raise ValueError("value %d out of range 1..%d" % (v, n))
        if len(set(values)) != len(values):
            raise ValueError("values must be pairwise distinct")
        self.n = n
        self.values = values

    @property
    def r(self):
        return self.n - len(self.values)

    @classmethod
    def from_text(cls, text):
        """Parse 'n:v1,v2,...' (or 'n:' for an empty domain)."""
        head, sep, body = text.partition(":")
        if not sep:
            raise ValueError("expected 'n:v1,v2,...', got %r" % text)
        n = int(head)
        values = [int(x) for x in body.split(",")] if body else []
        return cls(n, values)

    def to_text(self):
        return "%d:%s" % (self.n, ",".join(str(v) for v in self.values))

    def __eq__(self, other):
        if not isinstance(other, PartialInj):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return "PartialInj(%d, %r)" % (self.n, self.values)


class PathCycleRep(NamedTuple):
    paths: tuple
    cycles: tuple


def exc(s):
    """Number of positions mapped strictly upward."""
    return sum(1 for i, v in enumerate(s.values, 1) if v > i)


def to_path_cycle(s):
    """Decompose the functional graph into the normal form."""
    d = len(s.values)
    image = set(s.values)
    paths = []
    for start in range(1, s.n + 1):
        if start in image:
            continue
        path = [start]
        x = start
        while x <= d:
            x = s.values[x - 1]
            path.append(x)
        paths.append(tuple(path))
    paths.sort(key=lambda p: p[-1])
    used = {x for p in paths for x in p}
    cycles = []
    for start in range(1, d + 1):
        if start in used:
            continue
        cyc = [start]
        used.add(start)
        x = s.values[start - 1]
        while x != start:
            cyc.append(x)
            used.add(x)
            x = s.values[x - 1]
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: -c[0])
    return PathCycleRep(tuple(paths), tuple(cycles))


def from_path_cycle(rep):
    """Rebuild the injection from any path-cycle representation.

    The codomain size is the largest element, the domain length is that
    minus the number of paths. Raises on structural defects: elements
    missing or repeated, a path ending inside the domain, interior path
    or cycle elements outside it.
    """
    paths = [tuple(p) for p in rep.paths]
    cycles = [tuple(c) for c in rep.cycles]
    if not paths:
        raise ValueError("at least one path is required")
    if any(not p for p in paths) or any(not c for c in cycles):
        raise ValueError("empty path or cycle")
    elems = [x for p in paths for x in p] + [x for c in cycles for x in c]
    n = max(elems)
    if sorted(elems) != list(range(1, n + 1)):
        raise ValueError("elements must cover 1..%d exactly once" % n)
    d = n - len(paths)
    values = [0] * d
    for p in paths:
        if p[-1] <= d:
            raise ValueError("path %r ends at %d, inside the domain 1..%d" % (p, p[-1], d))
        for a, b in zip(p, p[1:]):
            if a > d:
                raise ValueError("interior path element %d is outside the domain" % a)
            values[a - 1] = b
    for c in cycles:
        for idx, a in enumerate(c):
            if a > d:
                raise ValueError("cycle element %d is outside the domain" % a)
            values[a - 1] = c[(idx + 1) % len(c)]
    return PartialInj(n, values)


def render_path_cycle(rep):
    return "".join(
        "<%s>" % ",".join(str(x) for x in p) for p in rep.paths
    ) + "".join("(%s)" % ",".join(str(x) for x in c) for c in rep.cycles)


def parse_path_cycle(text):
    paths = []
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos] == "<":
            close, bucket = ">", paths
        elif text[pos] == "(":
            close, bucket = ")", cycles
        else:
            raise ValueError("expected '<' or '(' at position %d in %r" % (pos, text))
        end = text.find(close, pos + 1)
        if end < 0:
            raise ValueError("unterminated group in %r" % text)
        body = text[pos + 1 : end]
        if not body:
            raise ValueError("empty group in %r" % text)
        bucket.append(tuple(int(x) for x in body.split(",")))
        pos = end + 1
    return PathCycleRep(tuple(paths), tuple(cycles))


def chi(w):
    """Recode a word whose largest value n is the only repeated one.

    The copies of n become n, n+1, ... left to right. The prefix up to
    the last copy splits after each of them; those segments are the
    paths. The remainder splits at its left-to-right minima; those
    segments are the cycles, already in normal form. Ascents of the
    word exceed excedances of the result by exactly one.
    """
    w = tuple(w)
    spec = word_spec(w)
    n = spec.n
    if n == 0:
        raise ValueError("empty word")
    m = spec.mult[-1]
    if spec.mult != (1,) * (n - 1) + (m,):
        raise ValueError("only the largest value may repeat in this word")
    if not is_quasi_stirling(w):
        raise ValueError("word is not quasi-Stirling")
    relabeled = []
    nxt = n
    last_top = -1
    for i, v in enumerate(w):
        if v == n:
            relabeled.append(nxt)
            nxt += 1
            last_top = i
        else:
            relabeled.append(v)
    paths = []
    seg = []
    for v in relabeled[: last_top + 1]:
        seg.append(v)
        if v >= n:
            paths.append(tuple(seg))
            seg = []
    cycles = []
    cur = []
    low = None
    for v in relabeled[last_top + 1 :]:
        if low is None or v < low:
            if cur:
                cycles.append(tuple(cur))
            cur = [v]
            low = v
        else:
            cur.append(v)
    if cur:
        cycles.append(tuple(cur))
    return from_path_cycle(PathCycleRep(tuple(paths), tuple(cycles)))


def chi_inv(s):
    """Flatten the normal form back into the word: paths then cycles,
    with every element outside the domain collapsed to the value n."""
    rep = to_path_cycle(s)
    n = s.n - len(rep.paths) + 1
    flat = [x for p in rep.paths for x in p] + [x for c in rep.cycles for x in c]
    return tuple(min(x, n) for x in flat)


def delta(w):
    """Same recoding after complementing, for words whose only repeated
    value is 1; descents of the word exceed excedances by one."""
    w = tuple(w)
    spec = word_spec(w)
    n = spec.n
    if n == 0:
        raise ValueError("empty word")
    m = spec.mult[0]
    if spec.mult != (m,) + (1,) * (n - 1):
        raise ValueError("only the value 1 may repeat in this word")
    return chi(complement(w, n))


def delta_inv(s):
    w = chi_inv(s)
    return complement(w, word_spec(w).n)


def enumerate_J(n, r):
    """All injections with domain {1..n-r} and codomain 1..n, in
    lexicographic order of their value sequences; there are n!/r!."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    for values in permutations(range(1, n + 1), n - r):
        yield PartialInj(n, values)
