"""
Edge covers of complete multipartite graphs
===========================================

Inclusion-exclusion over the vertices left uncovered counts edge covers
exactly.  It does not enforce connectivity, so it is not E_c.
"""

# %%
import numpy as np

from cecpoly import cec_poly_oracle, ec_poly_oracle, generate, spec
from cecpoly import formulas as F
from cecpoly.oracle import ec_poly_covered_dp

# %%
for parts in [(1, 1, 1), (2, 2), (1, 1, 2)]:
    g = generate(spec("complete_multipartite", *parts))
    print(parts, F.ec_count_multipartite(parts), ec_poly_oracle(g)(1), "connected:", cec_poly_oracle(g)(1))

# %%
# Larger part lists go through a DP over covered-vertex sets instead of edge subsets.
parts = (3, 3, 3, 3)
g = generate(spec("complete_multipartite", *parts))
dp = ec_poly_covered_dp(g)
ie = F.ec_poly_multipartite(parts)
print(g.m, "edges; DP == inclusion-exclusion:", dp == ie)
print(np.array(ie.coeffs[-6:]))

# %%
# The Turan sum is the same computation on balanced parts.
print(F.turan_ie_poly(5, 3) == ec_poly_oracle(generate(spec("turan", 5, 3))))
