"""Rigged configurations: the running example, its crystal moves, and highest weight enumeration."""
from triality import kleber, rc

F = ((1, 1), (2, 1), (1, 2))
x = rc.make_rc(F, ((4, 1), (4,)), ((3, 1), (-2,)))

print("B = B^(1,1) (x) B^(2,1) (x) B^(1,2)")
print(x.display())
print("weight", x.weight(), " affine weight", rc.rc_affine_weight(x))
print()
for a in (1, 2):
    for op in ("e", "f"):
        y = getattr(x, op)(a)
        print(f"{op}_{a}:", y if y is not None else 0)

print()
hw = rc.enumerate_hw(F)
print(f"{len(hw)} highest weight rigged configurations in RC(B)")
by_weight = {}
for y in hw:
    by_weight.setdefault(y.weight(), []).append(rc.cocharge(y))
for w in sorted(by_weight):
    print(f"  weight {w}: cocharges {sorted(by_weight[w])}")

# the virtual Kleber tree gives the same list
same = sorted(map(str, kleber.virtual_kleber(F))) == sorted(map(str, hw))
print("virtual Kleber agrees:", same)

tree = kleber.virtual_kleber_tree(((2, 2),))
print()
print("virtual Kleber tree for B^(2,2):")
for n in tree.nodes:
    print("  " * n.depth + f"{n.weight}  via {n.label}")
