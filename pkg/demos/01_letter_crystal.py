"""The letter crystal B^{1,1} and the KR crystals B^{1,s}.

Walks the eight letters with all three operators, then counts B^{1,s}
and checks that psi reverses arrows.
"""
from triality import core
from triality.tableaux import EMPTY, b1s_elements, psi, row


def name(b):
    return " ".join(b.letters) or EMPTY


g = core.generate_closure(b1s_elements(1), (0, 1, 2))
print(f"B^(1,1): {g.number_of_nodes()} elements")
for u, v, d in sorted(g.edges(data=True), key=lambda e: (e[2]["label"], name(e[0]))):
    print(f"  f_{d['label']}: {name(u):>3} -> {name(v)}")

print()
for s in range(1, 5):
    elems = b1s_elements(s)
    hw = [b for b in elems if core.is_highest_weight(b)]
    print(f"B^(1,{s}): {len(elems):4d} elements, classical highest weights {[name(b) for b in hw]}")

b = row(3, ["1", "1", "2"])
print()
print(f"psi({name(b)}) = {name(psi(b))}")
ok = all(psi(x).e(a) == (None if x.f(a) is None else psi(x.f(a)))
         for s in (1, 2, 3) for x in b1s_elements(s) for a in (0, 1, 2))
print("e_a psi = psi f_a on B^(1,s), s <= 3:", ok)
