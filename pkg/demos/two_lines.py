"""
Two lines on one surface: skew versus meeting
=============================================

For the sum of two line classes the tangent codimension is 2(d-3) when the
lines are skew.  When they meet it drops, which is what makes the component
non-reduced.  The drop is measured here, over two primes.
"""

from hodgelocus import FieldSpec, meeting_vs_skew_lines

for d in (5, 6):
    for p in (2**31 - 1, 1073741827):
        field = FieldSpec.prime(p)
        for conf in ("skew", "meeting"):
            r = meeting_vs_skew_lines(d, seed=0, configuration=conf, field=field)
            print(f"d={d} p={p} {conf:8s} single {r.single_codims} "
                  f"ratios {r.ratios} -> codims {r.codims} (2(d-3) = {r.benchmark})")
