"""Walk through the exact geometry around the canonical nodal hyperplane.

Run with ``python demos/canonical_geometry.py``.
"""

from sp3geom.algebra import LinSubspace, SymMat3
from sp3geom.incidence import line_from_axis, quadric_in_hyperplane, quadric_span, vertex_conic
from sp3geom.projection import double_project, projection_center
from sp3geom.quartic import F_eval, F_grad, classify_orbit, hat_pivot
from sp3geom.sp3 import exp_map, from_blocks, is_on_sigma

ZERO = [[0] * 3 for _ in range(3)]
Y0 = SymMat3.from_entries(0, 1, 0, 0, 0, 1)  # 2 y1 y2 + y3^2

print("A point of Sigma in the affine chart:")
X = SymMat3.diag(1, 2, 3)
u = exp_map(X)
print("  exp(diag(1,2,3)) =", [str(x) for x in u])
print("  on Sigma:", is_on_sigma(u), " orbit:", classify_orbit(u).value)

print("\nThe covector c = (0 : 0 : Y0 : 0):")
c = from_blocks(0, ZERO, Y0.full(), 0)
print("  F(c) =", F_eval(c), " grad F(c) =", [str(g) for g in F_grad(c)])
print("  orbit:", classify_orbit(c).value)
print("  hat pivot:", [str(x) for x in hat_pivot(c)])

vc = vertex_conic(c)
print("  vertex conic:", vc.form, "in the plane spanned by",
      ", ".join("(" + " ".join(str(x) for x in b) + ")" for b in vc.plane.basis))

e1, e3 = [1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]
print("  Q_e1 inside H_c:", quadric_in_hyperplane(c, e1))
print("  Q_e3 inside H_c:", quadric_in_hyperplane(c, e3))
print("  rank of the quadric Q_e1:", quadric_span(e1).rank())

print("\nDouble projection from the line with axis <e2, e3>:")
pd = projection_center(line_from_axis(LinSubspace.span([[0, 1, 0, 0, 0, 0], e3], 6)))
for M in (SymMat3.diag(1, 2, 3), SymMat3.from_entries(1, 1, 0, 2, 1, 3)):
    adj, d = M.adjugate().full(), M.det()
    print(f"  X = {[str(x) for x in M.entries]}: image {[str(x) for x in double_project(pd, exp_map(M))]},"
          f" first adjugate row and det {[str(x) for x in adj[0] + [d]]}")
