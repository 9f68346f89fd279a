"""Folding into type D4: rigged configurations and tableaux."""
from triality import rc
from triality import virtualization as V
from triality.tableaux import column_tableau, row

x = rc.hw1_rc(1, 3)
v = V.rc_virtualize(x)
print("G2:", x)
print("D4:", v)
print("weights", x.weight(), "->", v.weight(), "= Psi:", V.psi_embed(x.weight()) == v.weight())
print("cocharge", rc.cocharge(x), "virtual", V.virtual_cocharge(x))

y = x.f(1)
print("f_1 then virtualize equals f_2 on the image:", V.rc_virtualize(y) == V.virtual_f(1, v))
z = y.f(2)
print("f_2 then virtualize equals f_1 f_3 f_4 on the image:", V.rc_virtualize(z) == V.virtual_f(2, V.rc_virtualize(y)))

print()
b = row(3, ["1", "0", "-1"])
cols = V.tableau_virtualize(b)
print(" ".join(b.letters), "->", cols)

print()
for top, bottom in [("1", "2"), ("1", "0"), ("1", "E"), ("E", "E")]:
    out = V.b2_virtualize(column_tableau(top, bottom))
    print(f"column ({top},{bottom}) -> {out['column_form'][0]} (x) {','.join(out['column_form'][1])}")
