"""Experimental e_0, f_0 on rigged configurations, compared with the tableau model."""
from triality import cli, core, rc

for s in (1, 2):
    res = cli.suite_affine_conjecture(s)
    print(f"s <= {s}: {res['checked']} comparisons, {len(res['counterexamples'])} counterexamples")

g = core.generate_closure([rc.AffineRC(x) for x in rc.rc_elements(((1, 1),))], (0, 1, 2))
print()
print("RC(B^(1,1)) with the experimental 0-arrows:")
for u, v, d in g.edges(data=True):
    if d["label"] == 0:
        print(f"  {u.rc}  --0-->  {v.rc}")
print("matches the known picture:", cli.rc_b11_figure_check()["pass"])
