"""
Words, families and their statistics
====================================

A quick tour of the word layer: which multiset permutations belong to
the family, what asc/des/plat mean, and the closed counting formula.
"""

from math import factorial

import qstirling as q

# The multiset {1,1,2,2} written as a multiplicity vector.
spec = q.MultisetSpec((2, 2))

print("family of", spec.to_text())
for w in q.enumerate_qs(spec):
    st = q.stats(w)
    print(" ", q.word_to_text(w), "  asc=%d des=%d plat=%d" % st)

# 1212 is the forbidden crossing: two distinct values interleaved.
print("\n1,2,1,2 allowed?", q.is_quasi_stirling((1, 2, 1, 2)))
print("2,1,1,2 allowed?", q.is_quasi_stirling((2, 1, 1, 2)))

# Nothing between two equal letters may be smaller. That stricter rule
# carves out the classical subfamily.
print("2,1,1,2 classical?", q.is_stirling((2, 1, 1, 2)))
print("1,2,2,1 classical?", q.is_stirling((1, 2, 2, 1)))

# The family size only depends on K (total letters) and n (distinct
# values): K!/(K-n+1)!.
print("\nsizes for a few multisets:")
for mult in [(2, 2), (3, 1), (1, 1, 2), (2, 2, 2)]:
    s = q.MultisetSpec(mult)
    count = sum(1 for _ in q.enumerate_qs(s))
    formula = factorial(s.K) // factorial(s.K - s.n + 1)
    print("  %-8s %5d  (formula %d)" % (s.to_text(), count, formula))

# The three statistics always add up to K+1, thanks to the zero
# sentinels at both ends.
w = (2, 7, 4, 7, 5, 6, 3, 3, 5, 1, 5)
st = q.stats(w)
print("\n", q.word_to_text(w))
print("  asc+des+plat =", st.asc + st.des + st.plat, "= K+1 =", len(w) + 1)

# The whole joint distribution in one polynomial, t marking descents,
# u ascents, v plateaux.
print("\njoint distribution of", spec.to_text(), "->", q.qs_polynomial(spec).pretty())
