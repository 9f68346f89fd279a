"""Energy, cocharge and X = M on a small tensor product of rows."""
from triality import statistics as S
from triality.core import Tensor
from triality.tableaux import highest_row, row

shape = (2, 1)
X = S.X_poly(shape)
M = S.M_poly(S.shape_to_factors(shape))
print("B = B^(1,2) (x) B^(1,1)")
for w in sorted(X):
    print(f"  weight {w}:  X = {X[w].as_expr()}   M = {M[w].as_expr()}")
print("X = M:", all(X[w] == M.get(w) for w in X))

print()
t = Tensor((row(1, ["2"]), highest_row(3, 2)))
print("R(2 (x) 1 1) in B^(1,1) (x) B^(1,3) =", S.r_matrix(t))
print("local energy H =", S.local_energy(t))

print()
print("B^(2,s) decomposition, s = 1..3")
for s in (1, 2, 3):
    d = S.decomposition_check(s)
    print(f"  s = {s}: {d['hw_count']} highest weights, formula ok {d['multiplicities_match']}, grading ok {d['grading_match']}")
