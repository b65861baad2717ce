"""Multiset permutations and their boundary statistics.

A multiset is described by its multiplicity vector (k_1, ..., k_n),
standing for {1^k_1, ..., n^k_n} with every k_i >= 1. A word is a
permutation of such a multiset, stored as a plain tuple of ints.

Statistics are taken against zero sentinels on both ends: a word of
length L is scanned over positions 0..L with w_0 = w_{L+1} = 0, so
asc + des + plat = L + 1 for every nonempty word, and the empty word
has all three equal to zero.

A word is quasi-Stirling when no two distinct values interleave, i.e.
there are no positions i < j < k < l with w_i = w_k, w_j = w_l and
w_i != w_j. Equivalently the spans [first occurrence, last occurrence]
of the distinct values form a nested family, which is what the linear
recognizer below checks with a stack of open values.

Everything in this module is a pure function on immutable data.
"""

from typing import Iterator, NamedTuple

from .exactpoly import PolyTUV


class StatTriple(NamedTuple):
    asc: int
    des: int
    plat: int


class MultisetSpec:
    """Multiplicity vector for the ground multiset.

    `n` is the number of distinct values, `K` the total size. The empty
    spec is allowed as a degenerate value (bare-root tree, empty word);
    all counting machinery assumes n >= 1.
    """

    __slots__ = ("mult",)

    def __init__(self, mult):
        mult = tuple(int(k) for k in mult)
        if any(k < 1 for k in mult):
            raise ValueError("multiplicities must be >= 1")
        self.mult = mult

    @property
    def n(self):
        return len(self.mult)

    @property
    def K(self):
        return sum(self.mult)

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if not text:
            raise ValueError("empty multiplicity list")
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError("bad multiplicity list %r" % text) from None
        return cls(parts)

    def to_text(self):
        return ",".join(str(k) for k in self.mult)

    def matches(self, word):
        counts = [0] * (self.n + 1)
        for v in word:
            if not 1 <= v <= self.n:
                return False
            counts[v] += 1
        return tuple(counts[1:]) == self.mult

    def check_word(self, word):
        if not self.matches(word):
            raise ValueError(
                "word %r is not a permutation of the multiset %s"
                % (word, self.to_text() or "()")
            )

    def __eq__(self, other):
        if isinstance(other, MultisetSpec):
            return self.mult == other.mult
        return NotImplemented

    def __hash__(self):
        return hash(self.mult)

    def __repr__(self):
        return "MultisetSpec(%r)" % (self.mult,)


def word_from_text(text):
    """Parse the comma-separated wire format; empty text is the empty word."""
    text = text.strip()
    if not text:
        return ()
    try:
        word = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError("bad word text %r" % text) from None
    if any(v < 1 for v in word):
        raise ValueError("word values must be positive")
    return word


def word_to_text(word):
    return ",".join(str(v) for v in word)


def word_spec(word):
    """Recover the MultisetSpec a word is a permutation of.

    Every multiset has all multiplicities >= 1, so each of 1..n must
    occur; a gap means the word belongs to no valid multiset.
    """
    if not word:
        return MultisetSpec(())
    n = max(word)
    counts = [0] * (n + 1)
    for v in word:
        if v < 1:
            raise ValueError("word values must be positive")
        counts[v] += 1
    if 0 in counts[1:]:
        missing = counts.index(0, 1)
        raise ValueError("value %d is absent from %r" % (missing, word))
    return MultisetSpec(counts[1:])


def stats(word) -> StatTriple:
    """Count ascents, descents and plateaux against the zero sentinels."""
    if not word:
        return StatTriple(0, 0, 0)
    asc = des = plat = 0
    prev = 0
    for v in word:
        if prev < v:
            asc += 1
        elif prev > v:
            des += 1
        else:
            plat += 1
        prev = v
    des += 1  # trailing sentinel: prev > 0
    return StatTriple(asc, des, plat)


def is_quasi_stirling(word) -> bool:
    """True iff no two distinct values occur in the crossing pattern abab."""
    first = {}
    last = {}
    for pos, v in enumerate(word):
        if v not in first:
            first[v] = pos
        last[v] = pos
    stack = []
    for pos, v in enumerate(word):
        if first[v] == pos:
            stack.append(v)
        elif stack[-1] != v:
            return False
        if last[v] == pos:
            stack.pop()
    return True


def is_stirling(word) -> bool:
    """True iff every value sitting between two equal values exceeds them."""
    positions = {}
    for pos, v in enumerate(word):
        positions.setdefault(v, []).append(pos)
    for v, ps in positions.items():
        if len(ps) > 2:
            return False  # a middle copy of v is not > v
        if len(ps) == 2:
            for q in range(ps[0] + 1, ps[1]):
                if word[q] <= v:
                    return False
    return True


def enumerate_qs(spec) -> Iterator[tuple]:
    """Yield the quasi-Stirling permutations of the multiset in lex order.

    Backtracking with the open-value stack: a value may be placed only
    when it is fresh or currently on top of the stack, which prunes
    exactly the crossing patterns.
    """
    n = spec.n
    K = spec.K
    if K == 0:
        yield ()
        return
    mult = spec.mult
    remaining = list(mult)
    placed = [0] * (n + 1)
    stack = []
    word = []

    def rec():
        if len(word) == K:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            if remaining[v - 1] == 0:
                continue
            fresh = placed[v] == 0
            if not fresh and stack[-1] != v:
                continue
            if fresh:
                stack.append(v)
            placed[v] += 1
            remaining[v - 1] -= 1
            popped = placed[v] == mult[v - 1]
            if popped:
                stack.pop()
            word.append(v)
            yield from rec()
            word.pop()
            if popped:
                stack.append(v)
            remaining[v - 1] += 1
            placed[v] -= 1
            if fresh:
                stack.pop()

    yield from rec()


def qs_polynomial(spec) -> PolyTUV:
    """Joint distribution of (des, asc, plat) over the quasi-Stirling words,
    as a polynomial with t marking descents, u ascents, v plateaux."""
    terms = {}
    for word in enumerate_qs(spec):
        a, d, p = stats(word)
        key = (d, a, p)
        terms[key] = terms.get(key, 0) + 1
    return PolyTUV(terms)


def complement(word, n):
    """Replace every value i by n + 1 - i; swaps ascents with descents."""
    word = tuple(word)
    if any(not 1 <= v <= n for v in word):
        raise ValueError("word values must lie in 1..%d" % n)
    return tuple(n + 1 - v for v in word)
