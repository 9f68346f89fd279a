"""The bijection Phi, one delta at a time."""
from triality import bijection, rc
from triality.cli import format_tensor

F = ((1, 1), (2, 1), (1, 2))
x = rc.make_rc(F, ((4, 1), (4,)), ((3, 1), (-2,)))

trace = []
t = bijection.phi(x, trace)
print("start:", x)
for step, y, letter in trace:
    out = f"  {step:5s} -> {y}"
    if letter is not None:
        out += f"   returns {letter}"
    print(out)
print("Phi =", format_tensor(t))
print("Phi^-1 recovers the input:", bijection.phi_inv(t) == x)

# one delta step with its selected lengths
y, b, tr = bijection.delta(rc.make_rc(F, ((4, 1), (4,)), ((5, 1), (-2,))))
print()
print("delta returns", b, "with", {k: v for k, v in tr.to_json().items() if k not in ("letter", "cases")})

hw = rc.enumerate_hw(F)
images = {bijection.phi(z) for z in hw}
print(f"{len(hw)} highest weight elements, {len(images)} distinct images")
