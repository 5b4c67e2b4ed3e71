"""
The Jacobian ring of the Fermat quintic surface
===============================================

R_F = S/J_F is Artinian Gorenstein with socle degree 2N, and the
multiplication pairing R^k x R^{2N-k} -> R^{2N} is perfect.
"""

from hodgelocus import JacobianRing, ci_hilbert_series, macaulay_verify, parse_poly, rank

F = parse_poly("x0^5 + x1^5 + x2^5 + x3^5")
ring = JacobianRing(F)
print(ring)

# graded dimensions against the complete-intersection Hilbert series
dims = [ring.dim(k) for k in range(ring.sigma + 2)]
print("dims     ", dims)
print("series   ", ci_hilbert_series([4, 4, 4, 4], 4, ring.sigma + 1))

# the socle is spanned by one monomial, and lambda is 1 there
lam = ring.socle_functional()
print("socle monomial", lam.anchor, "lambda =", lam(parse_poly("x0^3*x1^3*x2^3*x3^3")))

# a middle pairing matrix has full rank
pair = ring.pairing_matrix(ring.N)
print(f"pairing at k=N: {pair.shape}, rank {rank(pair)}")

report = macaulay_verify(ring)
print("Macaulay duality holds:", report.passed)
