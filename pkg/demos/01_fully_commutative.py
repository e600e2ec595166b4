"""
Fully commutative elements in types A and D.

Counts FC(A_{n-1}) against the Catalan numbers and FC(D_n) against
((n+3)/2) C(n) - 1, then looks at one commutation class up close.
"""

from math import comb

from tld import Word, build_graph, commutation_class, enumerate_fc, is_fully_commutative


def catalan(n):
    return comb(2 * n, n) // (n + 1)


print("type A: |FC(A_{n-1})| vs C(n)")
for n in range(2, 8):
    print(f"  n={n}: {len(enumerate_fc(build_graph('A', n - 1))):5d}  C(n)={catalan(n)}")

print("type D: |FC(D_n)| vs ((n+3)/2) C(n) - 1")
for n in range(4, 7):
    print(f"  n={n}: {len(enumerate_fc(build_graph('D', n))):5d}  "
          f"formula={(n + 3) * catalan(n) // 2 - 1}")

A4 = build_graph("A", 4)
for text in ("3,1,2,4,3", "3,1,2,3,4"):
    word = Word.parse(A4, text)
    members = ", ".join(str(w) for w in commutation_class(word))
    print(f"{text}: FC={is_fully_commutative(word)}; class = {{{members}}}")
