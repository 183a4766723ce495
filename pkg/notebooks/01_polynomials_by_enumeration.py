"""
Connected edge cover polynomials by enumeration
================================================

Every edge subset of a small graph is checked: does it touch every vertex, and
is the graph it spans connected?  Counting the survivors by size gives the
coefficients of E_c(G, x).
"""

# %%
import numpy as np

from cecpoly import cec_poly_oracle, ec_poly_oracle, generate, spec
from cecpoly.poly import format_poly

# %%
# The 5-cycle: all five edges, or any four of them.
c5 = generate(spec("cycle", 5))
print(format_poly(cec_poly_oracle(c5)))

# %%
# Dropping the connectivity requirement gives the ordinary edge cover polynomial.
k4 = generate(spec("complete", 4))
print("connected:", format_poly(cec_poly_oracle(k4)))
print("any cover:", format_poly(ec_poly_oracle(k4)))

# %%
# The lowest exponent is rho_c(G); for these graphs it is n - 1.
for name, params in [("wheel", (7,)), ("hypercube", (3,)), ("cocktail_party", (3,))]:
    g = generate(spec(name, *params))
    p = cec_poly_oracle(g)
    coeffs = np.array(p.coeffs, dtype=np.int64)
    print(f"{name}{params}: n={g.n} m={g.m} min exponent {p.min_exp} total {coeffs.sum()}")
