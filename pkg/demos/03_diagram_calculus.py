"""
Decorated diagrams: simple diagrams, concatenation with loop removal, and
the monomial basis of DTL(D_n) read off from fully commutative words.
"""

from tld import (
    AlgebraElement, AlgebraKind, Diagram, Mode, ONE_BAR, Word, build_graph, concat,
    diagram_of_word, simple_diagram, verify_presentation,
)
from tld.render import diagram_ascii

print("d_1bar on 6 strands:")
print(diagram_ascii(simple_diagram(6, ONE_BAR)))

kind = AlgebraKind("dtl-a", 4)
factors = [
    Diagram.from_edges(5, [("t1", "t2"), ("b1", "b2"), ("t3", "b3"), ("t4", "b4"),
                           ("t5", "b5")], kind="A"),
    Diagram.from_edges(5, [("t1", "t2"), ("t4", "t5"), ("t3", "b5"), ("b1", "b4"),
                           ("b2", "b3")], kind="A"),
    Diagram.from_edges(5, [("t1", "t4"), ("t2", "t3"), ("t5", "b3"), ("b1", "b2"),
                           ("b4", "b5")], kind="A"),
]
product = AlgebraElement.unit(kind)
for f in factors:
    product = product * AlgebraElement.basis(kind, f)
print()
print("triple product in DTL(A_4):", product)

d1, d1bar = simple_diagram(4, 1), simple_diagram(4, ONE_BAR)
print()
print("d_1 d_1bar in DTL:", concat(d1, d1bar, Mode.DTL))
print("d_1 d_1bar in LFD:", concat(d1, d1bar, Mode.LFD))

r = diagram_of_word(Word.parse(build_graph("D", 5), "1bar,1,3"))
print()
print("diagram of 1bar,1,3 (type I, decorated loop):")
print(diagram_ascii(r.diagram))

for name in ("dtl-d", "lfd-d"):
    print(name, "relations hold at n=5:", verify_presentation(name, 5)["pass"])
