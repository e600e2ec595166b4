"""
The cell datum of LFD(D_n): half-diagrams, the label poset, and an
exhaustive check of the three cellular axioms.
"""

from tld import HalfDiagram, build_cell_datum, join, split, verify_cellularity
from tld.render import diagram_ascii

h1 = HalfDiagram(6, ((1, 2), (4, 5)))
h2 = HalfDiagram(6, ((1, 4), (2, 3)), frozenset({(1, 4)}))
d = join(h1, h2)
print(f"{h1} o {h2}:")
print(diagram_ascii(d))
top, bottom = split(d)
print("split back:", top, bottom)

for n in (4, 5):
    datum = build_cell_datum(n)
    print()
    print(f"n={n}: labels {[str(lam) for lam in datum.labels]}")
    for lam in datum.labels:
        print(f"  M({lam}) = {[str(h) for h in datum.M[lam]]}")
    print("  Hasse:", [(str(a), str(b)) for a, b in datum.hasse()])
    report = verify_cellularity(n, datum)
    print("  axioms:", report["axiom1"], report["axiom2"], report["axiom3"],
          "| dim", report["dim"], "| epsilons", report["epsilons"])
