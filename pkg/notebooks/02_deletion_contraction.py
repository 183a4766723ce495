"""
Past the enumeration budget
===========================

Enumeration stops at 26 edges.  Deletion-contraction with memoization on
canonical forms reaches K_8 and Q_4 in well under a second.
"""

# %%
import time

from cecpoly import EngineStats, cec_poly_engine, cec_poly_oracle, generate, spanning_tree_count, spec
from cecpoly.poly import format_poly

# %%
# Both methods agree wherever both apply.
for params in [("complete", 6), ("wheel", 7), ("turan", 7, 3)]:
    g = generate(spec(*params))
    assert cec_poly_engine(g) == cec_poly_oracle(g)
print("engine == oracle")

# %%
stats = EngineStats()
t0 = time.perf_counter()
q4 = cec_poly_engine(generate(spec("hypercube", 4)), stats=stats)
print(f"Q_4 in {time.perf_counter() - t0:.2f}s, memo {stats.as_dict()}")
print(format_poly(q4))

# %%
# The lowest coefficient counts spanning trees (matrix-tree theorem).
print(q4.coeff(15), spanning_tree_count(generate(spec("hypercube", 4))))

# %%
k8 = cec_poly_engine(generate(spec("complete", 8)))
print("K_8 total", k8(1))
