"""
Heaps of reduced words, the pattern test for full commutativity, and the
type I / type II split in type D.
"""

from collections import Counter

from tld import Word, build_graph, classify_type, enumerate_fc, fc_by_pattern, heap_of
from tld.render import heap_ascii

A5 = build_graph("A", 5)
heap = heap_of(Word.parse(A5, "2,1,3,2,4,5"))
print("heap of 2,1,3,2,4,5 (top row first):")
print(heap_ascii(heap))
print("covers:", sorted(heap.covers))
print("fully commutative by pattern:", fc_by_pattern(heap))

D5 = build_graph("D", 5)
print()
print("heap of 2,1bar,1,3,2 in D5:")
print(heap_ascii(heap_of(Word.parse(D5, "2,1bar,1,3,2"))))

for n in (4, 5, 6):
    split = Counter(classify_type(w).value for w in enumerate_fc(build_graph("D", n)))
    print(f"D{n}: type I = {split['I']}, type II = {split['II']}")
