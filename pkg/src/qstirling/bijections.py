"""Structure-preserving maps between trees and words.

The centerpiece is the pair phi/phi_inv matching each tree over a
multiset with the quasi-Stirling words over the same multiset, carrying
(cdes, casc, eleaf, first, last) to (des, asc, plat, first, last). On
top of it sit the multiplicity-shifting surgeries psi/psi_inv, their
iterate big_psi that flattens any multiset down to one where only the
value 1 repeats, the induced word maps big_phi/big_phi_inv, and
transport, which carries words between any two multisets sharing the
same number of values and total size while preserving the statistic
triple.

The tail of the module handles words over the flattened multisets
{1^m, 2, ..., n} directly: the block decomposition of maximally
descending words, and zeta, which folds an m-tuple of disjoint value
sequences into a single word.
"""

from itertools import permutations

from .core import MultisetSpec, is_quasi_stirling, stats, word_spec
from .trees import infer_spec, tree_violation


def _checked_spec(t):
    spec = infer_spec(t)
    bad = tree_violation(t, spec)
    if bad is not None:
        raise ValueError(bad)
    return spec


# ---------------------------------------------------------------------------
# trees <-> words


def _phi(t):
    children = t[1]
    if not children:
        return ()
    head = children[0]
    r = head[0]
    word = [r]
    for even in head[1]:
        word.extend(_phi((0, even[1])))
        word.append(r)
    word.extend(_phi((0, children[1:])))
    return tuple(word)


def phi(t):
    """Serialize a tree into its quasi-Stirling word.

    The leftmost root subtree, with odd vertex labeled r on top, opens
    the word: an r, then the contents of each even r vertex followed by
    another r, then the word of the tree with that whole subtree
    removed. Statistics transfer: (cdes, casc, eleaf, first, last) of
    the tree equal (des, asc, plat, first, last) of the word.
    """
    _checked_spec(t)
    return _phi(t)


def _phi_inv(w):
    if not w:
        return (0, ())
    r = w[0]
    cuts = [i for i, v in enumerate(w) if v == r]
    evens = []
    for a, b in zip(cuts, cuts[1:]):
        evens.append((r, _phi_inv(w[a + 1 : b])[1]))
    rest = _phi_inv(w[cuts[-1] + 1 :])
    return (0, ((r, tuple(evens)),) + rest[1])


def phi_inv(w):
    """Rebuild the unique tree whose word is w.

    The segments of w strictly between consecutive copies of its first
    value are value-disjoint from the remainder, so they recurse into
    the even subtrees, and the suffix after the last copy recurses into
    the later root subtrees.
    """
    w = tuple(w)
    word_spec(w)
    if not is_quasi_stirling(w):
        raise ValueError("word is not quasi-Stirling")
    return _phi_inv(w)


# ---------------------------------------------------------------------------
# multiplicity surgery on mutable nodes


class _Node:
    __slots__ = ("label", "children", "parent")

    def __init__(self, label):
        self.label = label
        self.children = []
        self.parent = None


def _to_nodes(t):
    root = _Node(t[0])
    for c in t[1]:
        child = _to_nodes(c)
        child.parent = root
        root.children.append(child)
    return root


def _to_tuple(node):
    return (node.label, tuple(_to_tuple(c) for c in node.children))


def _odd_vertex(root, j):
    hits = []
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        if depth % 2 == 1 and node.label == j:
            hits.append(node)
        for c in node.children:
            stack.append((c, depth + 1))
    if len(hits) != 1:
        raise ValueError(
            "expected one odd vertex labeled %d, found %d" % (j, len(hits))
        )
    return hits[0]


def _is_descendant(node, ancestor):
    x = node.parent
    while x is not None:
        if x is ancestor:
            return True
        x = x.parent
    return False


def _case1_attach_order(moved, relabeled):
    # moved subtrees keep their order, relabeled vertex lands rightmost;
    # the inverse direction keys on that rightmost position
    return list(moved) + [relabeled]


def _rotate_to_front_order(ys, pos):
    # the special child moves just ahead of the prefix it used to follow
    return ys[pos + 1 :] + [ys[pos]] + ys[:pos]


def _psi_step(root, j):
    oj = _odd_vertex(root, j)
    oj1 = _odd_vertex(root, j - 1)
    w = oj.children[-1]
    if _is_descendant(oj1, w):
        moved_low = list(oj1.children)
        oj1.children = []
        moved_high = list(oj.children[:-1])
        pos = w.children.index(oj1) if oj1.parent is w else -1
        w.label = j - 1
        oj.label = j - 1
        oj1.label = j
        oj.children = _case1_attach_order(moved_low, w)
        for x in oj.children:
            x.parent = oj
        oj1.children = moved_high
        for x in moved_high:
            x.parent = oj1
        if pos >= 0:
            w.children = _rotate_to_front_order(w.children, pos)
    else:
        oj.children.pop()
        w.label = j - 1
        w.parent = oj1
        oj1.children.append(w)


def _psi_inv_step(root, j):
    a = _odd_vertex(root, j)
    ojm1 = _odd_vertex(root, j - 1)
    w = ojm1.children[-1]
    if _is_descendant(a, w):
        t_low = list(ojm1.children[:-1])
        t_high = list(a.children)
        a.children = []
        pos = w.children.index(a) if a.parent is w else -1
        w.label = j
        a.label = j - 1
        ojm1.label = j
        a.children = t_low
        for x in t_low:
            x.parent = a
        ojm1.children = t_high + [w]
        for x in ojm1.children:
            x.parent = ojm1
        if pos >= 0:
            w.children = _rotate_to_front_order(w.children, pos)
    else:
        ojm1.children.pop()
        w.label = j
        w.parent = a
        a.children.append(w)


def psi(t, j):
    """Move one copy of value j down to value j-1, preserving the tree
    statistics (cdes, casc, eleaf).

    The rightmost even vertex labeled j is relabeled j-1 and rehomed.
    When the odd vertex j-1 sits inside that even vertex's subtree the
    two odd vertices trade labels and children as well; otherwise the
    even vertex simply becomes the rightmost child of the odd j-1. The
    result is a valid tree over the multiset with multiplicities
    (..., k_{j-1}+1, k_j-1, ...).
    """
    spec = _checked_spec(t)
    if j < 2 or j > spec.n:
        raise ValueError("j must be between 2 and %d, got %d" % (spec.n, j))
    if spec.mult[j - 1] < 2:
        raise ValueError(
            "value %d has multiplicity %d, need at least 2" % (j, spec.mult[j - 1])
        )
    root = _to_nodes(t)
    _psi_step(root, j)
    return _to_tuple(root)


def psi_inv(t, j):
    """Undo psi(..., j): move one copy of value j-1 back up to value j."""
    spec = _checked_spec(t)
    if j < 2 or j > spec.n:
        raise ValueError("j must be between 2 and %d, got %d" % (spec.n, j))
    if spec.mult[j - 2] < 2:
        raise ValueError(
            "value %d has multiplicity %d, need at least 2"
            % (j - 1, spec.mult[j - 2])
        )
    root = _to_nodes(t)
    _psi_inv_step(root, j)
    return _to_tuple(root)


def _shift_schedule(mult):
    """The j-sequence that flattens mult to (K-n+1, 1, ..., 1), always
    picking the largest value whose multiplicity is still at least 2."""
    m = list(mult)
    steps = []
    while True:
        j = next((i for i in range(len(m), 1, -1) if m[i - 1] >= 2), 0)
        if j == 0:
            break
        steps.append(j)
        m[j - 2] += 1
        m[j - 1] -= 1
    return steps, tuple(m)


def flattened_spec(spec):
    """The multiset with the same n and K in which only value 1 repeats."""
    if spec.n == 0:
        return spec
    return MultisetSpec((spec.K - spec.n + 1,) + (1,) * (spec.n - 1))


def big_psi(t):
    """Iterate psi until only the value 1 has multiplicity above 1."""
    spec = _checked_spec(t)
    steps, _ = _shift_schedule(spec.mult)
    if not steps:
        return t
    root = _to_nodes(t)
    for j in steps:
        _psi_step(root, j)
    return _to_tuple(root)


def big_phi(w):
    """Map a quasi-Stirling word onto the flattened multiset with the
    same n and K, preserving (asc, des, plat)."""
    w = tuple(w)
    spec = word_spec(w)
    if not is_quasi_stirling(w):
        raise ValueError("word is not quasi-Stirling")
    steps, _ = _shift_schedule(spec.mult)
    if not steps:
        return w
    root = _to_nodes(_phi_inv(w))
    for j in steps:
        _psi_step(root, j)
    return _phi(_to_tuple(root))


def big_phi_inv(w, target):
    """Inverse of big_phi, aimed at the given target multiset.

    The input word must live over the flattened form of the target; the
    shift schedule of the target is undone step by step in reverse.
    """
    if not isinstance(target, MultisetSpec):
        target = MultisetSpec(tuple(target))
    w = tuple(w)
    spec = word_spec(w)
    if not is_quasi_stirling(w):
        raise ValueError("word is not quasi-Stirling")
    flat = flattened_spec(target)
    if spec != flat:
        raise ValueError(
            "word multiset %s is not the flattened form %s of the target"
            % (spec.to_text() or "()", flat.to_text() or "()")
        )
    steps, _ = _shift_schedule(target.mult)
    if not steps:
        return w
    root = _to_nodes(_phi_inv(w))
    for j in reversed(steps):
        _psi_inv_step(root, j)
    return _phi(_to_tuple(root))


def transport(w, target):
    """Carry a quasi-Stirling word to the target multiset (same n, same
    K) through the flattened multiset, preserving (asc, des, plat)."""
    if not isinstance(target, MultisetSpec):
        target = MultisetSpec(tuple(target))
    w = tuple(w)
    spec = word_spec(w)
    if (spec.n, spec.K) != (target.n, target.K):
        raise ValueError(
            "source has n=%d, K=%d but target has n=%d, K=%d"
            % (spec.n, spec.K, target.n, target.K)
        )
    return big_phi_inv(big_phi(w), target)


# ---------------------------------------------------------------------------
# words over {1^m, 2, ..., n}


def _flat_word_params(w):
    spec = word_spec(w)
    n = spec.n
    if n == 0:
        raise ValueError("empty word")
    m = spec.mult[0]
    if spec.mult != (m,) + (1,) * (n - 1):
        raise ValueError("only the value 1 may repeat in this word")
    return m, n


def max_descent_decompose(w):
    """Split a word with the maximum descent count at its copies of 1.

    A word over {1^m, 2, ..., n} has at most n descents; those attaining
    n are exactly the concatenations b_1 1 b_2 1 ... b_m 1 whose blocks
    b_i are strictly decreasing (possibly empty) and jointly cover the
    values 2..n. Returns the m blocks.
    """
    w = tuple(w)
    m, n = _flat_word_params(w)
    if not is_quasi_stirling(w):
        raise ValueError("word is not quasi-Stirling")
    des = stats(w).des
    if des != n:
        raise ValueError("word has %d descents, the maximum %d is required" % (des, n))
    if w[-1] != 1:
        raise ValueError("maximally descending word must end in 1")
    parts = []
    prev = -1
    for pos, v in enumerate(w):
        if v == 1:
            parts.append(w[prev + 1 : pos])
            prev = pos
    for part in parts:
        if any(part[i] <= part[i + 1] for i in range(len(part) - 1)):
            raise ValueError("block %r is not strictly decreasing" % (part,))
    return tuple(parts)


# ---------------------------------------------------------------------------
# tuples of disjoint sequences


def check_perm_tuple(parts, anchored=False):
    """Raise unless the parts are disjoint sequences of distinct values
    jointly covering 1..n; with anchored=True, value 1 must additionally
    sit in the first part."""
    seen = []
    for part in parts:
        seen.extend(part)
    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise ValueError(
            "parts must cover 1..n exactly once, got values %s" % sorted(seen)
        )
    if anchored:
        if not parts or 1 not in parts[0]:
            raise ValueError("value 1 must lie in the first part")


def perm_tuple_from_text(text):
    """Parse '3,1||2' into ((3, 1), (), (2,))."""
    parts = []
    for chunk in text.split("|"):
        if chunk == "":
            parts.append(())
        else:
            parts.append(tuple(int(x) for x in chunk.split(",")))
    return tuple(parts)


def perm_tuple_to_text(parts):
    return "|".join(",".join(str(v) for v in part) for part in parts)


def _weak_compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _weak_compositions(total - head, slots - 1):
            yield (head,) + rest


def enumerate_perm_tuples(m, n, anchor=None):
    """All ways to distribute 1..n over m ordered slots, each slot an
    ordered sequence. With anchor=i, keep only tuples whose i-th slot
    contains the value 1."""
    if m < 1:
        raise ValueError("need at least one slot")
    if anchor is not None and not 1 <= anchor <= m:
        raise ValueError("anchor slot %r out of range 1..%d" % (anchor, m))
    for perm in permutations(range(1, n + 1)):
        for comp in _weak_compositions(n, m):
            parts = []
            start = 0
            for size in comp:
                parts.append(perm[start : start + size])
                start += size
            if anchor is not None and 1 not in parts[anchor - 1]:
                continue
            yield tuple(parts)


def zeta(a):
    """Fold an m-tuple of disjoint sequences covering 1..n, with value 1
    in the first part, into a word over {1^m, 2, ..., n}.

    Writing the first part as sigma 1 tau, the word is sigma, a 1, then
    each later part followed by a 1, then tau. Plateaus of the word
    count the empty parts; ascents and descents are the sums of those
    of the nonempty parts.
    """
    parts = tuple(tuple(p) for p in a)
    check_perm_tuple(parts, anchored=True)
    first = parts[0]
    cut = first.index(1)
    out = list(first[:cut])
    out.append(1)
    for part in parts[1:]:
        out.extend(part)
        out.append(1)
    out.extend(first[cut + 1 :])
    return tuple(out)


def zeta_inv(w):
    """Unfold a word over {1^m, 2, ..., n} back into its m-tuple: the
    text before the first 1 and after the last 1 rejoin around a 1 as
    the first part, the stretches between consecutive 1s become the
    remaining parts in order."""
    w = tuple(w)
    _flat_word_params(w)
    ones = [i for i, v in enumerate(w) if v == 1]
    blocks = []
    prev = -1
    for pos in ones:
        blocks.append(w[prev + 1 : pos])
        prev = pos
    tail = w[prev + 1 :]
    return (blocks[0] + (1,) + tail,) + tuple(blocks[1:])
