"""
The tree family and its word correspondence
===========================================

Every word of the family corresponds to an ordered rooted tree: the
root is labeled 0, each value i owns one odd-depth vertex whose
children repeat the label i, and the cyclic statistics of the tree
match the linear statistics of the word.
"""

import qstirling as q

# The eleven-letter worked example.
word = (2, 7, 4, 7, 5, 6, 3, 3, 5, 1, 5)
tree = q.phi_inv(word)
print("word:", q.word_to_text(word))
print("tree:", q.render_tree(tree))

ts = q.tree_stats(tree)
st = q.stats(word)
print("tree statistics: cdes=%d casc=%d eleaf=%d first=%d last=%d" % ts)
print("word statistics:  des=%d  asc=%d  plat=%d first=%d last=%d"
      % (st.des, st.asc, st.plat, word[0], word[-1]))

# and back again
assert q.phi(tree) == word

# The map walks the root's children: a repeated first letter r wraps
# the subtrees hanging under the odd vertex r.
print("\nsmall family side by side:")
spec = q.MultisetSpec((1, 2))
for t in q.enumerate_trees(spec):
    print("  %-12s ->  %s" % (q.render_tree(t), q.word_to_text(q.phi(t))))

# Validation is strict: an odd vertex must repeat its own label in all
# of its children.
bad = q.parse_tree("0(1(2))")
print("\n0(1(2)) violation:", q.tree_violation(bad, q.MultisetSpec((1, 1))))

# Tree counts therefore equal word counts, multiset by multiset.
for mult in [(2, 2), (2, 1, 1), (3, 2)]:
    spec = q.MultisetSpec(mult)
    trees = sum(1 for _ in q.enumerate_trees(spec))
    words = sum(1 for _ in q.enumerate_qs(spec))
    print("over %s: %d trees, %d words" % (spec.to_text(), trees, words))
