"""
Excedances and the path-cycle picture
=====================================

Words whose repeated value sits at the top (or bottom) of the value
range map onto partial injections, and descents of a word become
excedances of its injection, shifted by one.
"""

from collections import Counter

import qstirling as q

# A partial injection: 8 values mapped injectively into 1..11.
sigma = q.PartialInj(11, (7, 8, 1, 6, 2, 9, 3, 11))
print("sigma =", sigma.to_text(), " exc =", q.exc(sigma))

# Its standard decomposition: chains that leave the domain, then the
# cycles, each written with fixed ordering conventions.
rep = q.to_path_cycle(sigma)
print("standard form:", q.render_path_cycle(rep))

# Summing the adjacent ascents of every written block recovers exc.
rises = sum(
    sum(1 for i in range(len(seq) - 1) if seq[i] < seq[i + 1])
    for seq in rep.paths + rep.cycles
)
print("adjacent rises over all blocks:", rises)

# The worked example: a word whose largest value 9 repeats three times.
w = (4, 6, 9, 9, 5, 2, 8, 9, 1, 7, 3)
s = q.chi(w)
print("\nword", q.word_to_text(w))
print("chi ->", q.render_path_cycle(q.to_path_cycle(s)))
print("asc(word) = %d = exc + 1 = %d" % (q.stats(w).asc, q.exc(s) + 1))

# The mirror map handles words whose smallest value repeats, and trades
# descents instead of ascents.
v = (1, 3, 1, 2)
d = q.delta(v)
print("\nword", q.word_to_text(v))
print("delta ->", q.render_path_cycle(q.to_path_cycle(d)))
print("des(word) = %d = exc + 1 = %d" % (q.stats(v).des, q.exc(d) + 1))

# Histogram view: descents across a whole family against excedances
# across the matching injection family.
spec = q.MultisetSpec((2, 2, 1))
des_hist = Counter(q.stats(word).des for word in q.enumerate_qs(spec))
exc_hist = Counter(q.exc(s) for s in q.enumerate_J(spec.K, spec.K - spec.n + 1))
print("\nfamily %s:" % spec.to_text())
print("  descent histogram: ", dict(sorted(des_hist.items())))
print("  excedance histogram:", dict(sorted(exc_hist.items())))
