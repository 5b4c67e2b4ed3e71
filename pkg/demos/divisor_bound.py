"""
Degree bound for small effective divisors
=========================================

For C = sum a_i C_i with deg C + 4 <= d, the degree of O_X(C) on each
component is negative, so C is rigid.  Also printed: the expected tangent
codimensions of lines, conics and twisted cubics.
"""

import numpy as np

from hodgelocus import DivisorData, divisor_degree_bound, expected_codim_table
from hodgelocus.divisor import random_divisor

print(divisor_degree_bound(DivisorData.build(5, [(1, 1, 0)])))
print(divisor_degree_bound(DivisorData.build(7, [(1, 1, 0), (1, 1, 0)], [(0, 1, 1)])))

rng = np.random.default_rng(0)
samples = [divisor_degree_bound(random_divisor(rng)) for _ in range(500)]
print("random divisors with every value negative:", sum(s.passed for s in samples), "/ 500")

for row in expected_codim_table(range(5, 9)):
    print(row)
