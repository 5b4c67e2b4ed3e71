"""
A line on a quintic surface
===========================

F = x0 Q0 + x1 Q1 contains the line x0 = x1 = 0.  Its class representative
P spans the annihilator of I_N in R^{2N}, the tangent space T_{1,k} agrees
with the ideal (x0, x1, Q0, Q1) in every degree, and the tangent
codimension in degree d is d - 3.
"""

from hodgelocus import (ci_class_rep, duality_check, make_ci_hypersurface, nl_codim, variables,
                        verify_ci_tangent)

x0, x1, x2, x3 = variables(1)

for d in (5, 6):
    ci = make_ci_hypersurface([x0, x1], d=d, seed=0)
    rep = ci_class_rep(ci)
    check = verify_ci_tangent(ci, rep)
    print(f"d={d}  N={ci.N}  terms in P: {len(rep.P)}")
    for k, t1, ideal in check.rows:
        print(f"   k={k:2d}  dim T1={t1:4d}  dim I={ideal:4d}")
    print(f"   tangent codimension {nl_codim(rep)} (expected {d - 3})")
    print("   duality:", [duality_check(rep, k).passed for k in (1, d - 4, d)])

# rescaling the representative changes nothing downstream
print("scalar invariant:", rep.scaled(12345).t1(ci.d) == rep.t1(ci.d))
