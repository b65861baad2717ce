"""Ordered rooted labeled trees attached to a multiset.

For a multiplicity vector (k_1, ..., k_n) the family consists of the
plane trees whose root is labeled 0 and whose remaining labels are the
multiset {1^k_1, ..., n^k_n}, subject to one structural rule: every
vertex at odd depth labeled i carries exactly k_i - 1 children, all of
them labeled i. Vertices at even depth (the root included) may carry
any ordered run of subtrees.

Two facts follow from the rule and are relied on throughout: each value
i has exactly one odd-depth vertex, whose children are precisely the
even-depth copies of i; and the tree has K + 1 vertices in total.

A tree is a nested pair (label, children) with children a tuple of
trees, so trees are immutable and hashable. The text form is

    tree := label | label "(" tree ("," tree)* ")"

for example "0(1,2(2))". Labels are decimal naturals without leading
zeros.
"""

from typing import NamedTuple, Optional

from .core import MultisetSpec


class TreeStats(NamedTuple):
    cdes: int
    casc: int
    eleaf: int
    first: int
    last: int


def render_tree(t):
    label, children = t
    if not children:
        return str(label)
    return "%d(%s)" % (label, ",".join(render_tree(c) for c in children))


def parse_tree(text):
    """Parse the textual tree grammar back into nested tuples."""
    pos = 0

    def parse_label():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ValueError("expected a label at position %d in %r" % (start, text))
        digits = text[start:pos]
        if len(digits) > 1 and digits[0] == "0":
            raise ValueError("label with leading zero in %r" % text)
        return int(digits)

    def parse_node():
        nonlocal pos
        label = parse_label()
        children = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            children.append(parse_node())
            while pos < len(text) and text[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(text) or text[pos] != ")":
                raise ValueError("unclosed subtree list in %r" % text)
            pos += 1
        return (label, tuple(children))

    node = parse_node()
    if pos != len(text):
        raise ValueError("trailing text at position %d in %r" % (pos, text))
    return node


def iter_vertices(t):
    """Yield (node, depth) over all vertices, preorder."""
    stack = [(t, 0)]
    while stack:
        node, depth = stack.pop()
        yield node, depth
        for child in reversed(node[1]):
            stack.append((child, depth + 1))


def infer_spec(t):
    """Recover the MultisetSpec from the non-root labels, or raise."""
    if t[0] != 0:
        raise ValueError("root must be labeled 0")
    counts = {}
    for node, depth in iter_vertices(t):
        if depth == 0:
            continue
        label = node[0]
        if label < 1:
            raise ValueError("non-root label %d out of range" % label)
        counts[label] = counts.get(label, 0) + 1
    if not counts:
        return MultisetSpec(())
    n = max(counts)
    mult = tuple(counts.get(i, 0) for i in range(1, n + 1))
    if 0 in mult:
        raise ValueError("value %d is absent from the tree" % (mult.index(0) + 1))
    return MultisetSpec(mult)


def tree_violation(t, spec) -> Optional[str]:
    """None if the tree belongs to the family over `spec`, else a reason."""
    if t[0] != 0:
        return "root is labeled %d, expected 0" % t[0]
    n = spec.n
    counts = [0] * (n + 1)
    for node, depth in iter_vertices(t):
        label, children = node
        if depth == 0:
            if label != 0:
                return "root is labeled %d, expected 0" % label
            continue
        if not 1 <= label <= n:
            return "label %d out of range 1..%d" % (label, n)
        counts[label] += 1
        if depth % 2 == 1:
            want = spec.mult[label - 1] - 1
            if len(children) != want:
                return "odd vertex %d has %d children, expected %d" % (
                    label,
                    len(children),
                    want,
                )
            for child in children:
                if child[0] != label:
                    return "odd vertex %d has a child labeled %d" % (
                        label,
                        child[0],
                    )
    if tuple(counts[1:]) != spec.mult:
        return "label multiset %r does not match %s" % (
            tuple(counts[1:]),
            spec.to_text() or "()",
        )
    return None


def validate_tree(t, spec) -> bool:
    return tree_violation(t, spec) is None


def _cyclic_counts(seq):
    des = asc = 0
    L = len(seq)
    for i in range(L):
        a = seq[i]
        b = seq[(i + 1) % L]
        if a > b:
            des += 1
        elif a < b:
            asc += 1
    return des, asc


def tree_stats(t) -> TreeStats:
    """Cyclic descent/ascent totals, even-depth leaf count, and the labels
    of the leftmost and rightmost root subtrees.

    Each vertex contributes the cyclic descents and ascents of the
    sequence (own label, child labels left to right); a childless vertex
    contributes nothing. The bare root has no first or last child and is
    rejected.
    """
    if not t[1]:
        raise ValueError("statistics are undefined for the bare root")
    cdes = casc = eleaf = 0
    for node, depth in iter_vertices(t):
        label, children = node
        if children:
            d, a = _cyclic_counts((label,) + tuple(c[0] for c in children))
            cdes += d
            casc += a
        elif depth % 2 == 0:
            eleaf += 1
    return TreeStats(cdes, casc, eleaf, t[1][0][0], t[1][-1][0])


def enumerate_trees(spec):
    """Yield every tree over `spec`, ordered by serialized form.

    Construction: each value i contributes one odd vertex with its
    k_i - 1 even children fixed; what varies is which slot (the root or
    some even vertex) each odd vertex hangs from, and the order of odd
    vertices sharing a slot. Every acyclic assignment plus ordering
    yields a distinct member, and all members arise this way.
    """
    from itertools import permutations, product

    n = spec.n
    if n == 0:
        yield (0, ())
        return
    mult = spec.mult

    # slot 0 is the root; slot (i, c) is the c-th even child of value i
    slots = [0]
    slot_owner = [0]  # odd vertex owning the slot, 0 for the root
    slot_id = {}
    for i in range(1, n + 1):
        for c in range(1, mult[i - 1]):
            slot_id[(i, c)] = len(slots)
            slots.append((i, c))
            slot_owner.append(i)

    found = []
    for assign in product(range(len(slots)), repeat=n):
        parent = [None] + [slot_owner[assign[i - 1]] for i in range(1, n + 1)]
        ok = True
        for i in range(1, n + 1):
            seen = set()
            x = i
            while x:
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                x = parent[x]
            if not ok:
                break
        if not ok:
            continue
        members = [[] for _ in slots]
        for i in range(1, n + 1):
            members[assign[i - 1]].append(i)

        def build(i, orders):
            evens = []
            for c in range(1, mult[i - 1]):
                kids = tuple(build(x, orders) for x in orders[slot_id[(i, c)]])
                evens.append((i, kids))
            return (i, tuple(evens))

        for orders in product(*(permutations(m) for m in members)):
            root = (0, tuple(build(x, orders) for x in orders[0]))
            found.append((render_tree(root), root))
    found.sort(key=lambda pair: pair[0])
    for _, root in found:
        yield root
