"""Filling maps: Kang-Misra rows and B^{2,s} highest weights as KR tableaux."""
from triality import bijection, rc
from triality.cli import format_tensor
from triality.core import Tensor
from triality.tableaux import fill_1, fill_2, hw2_params, row

for s in (9, 8):
    b = row(s, ["3", "0", "-2", "-2", "-1"])
    print(f"B^(1,{s}):", " ".join(b.letters), "->", " ".join(fill_1(b).rows[0]))

print()
print("B^(2,2) highest weights (k1, k2, k3, x):")
for p in hw2_params(2):
    t = fill_2(p, 2)
    via_phi = bijection.phi(rc.hw2_rc(p, 2)) == Tensor((t,))
    print(f"  {p} -> {format_tensor(Tensor((t,)))}   equals Phi: {via_phi}")
