"""
Is E_c(G, x) unimodal?
======================

Scan a corpus of family members and look for a coefficient sequence that
rises, falls, and rises again.
"""

# %%
import numpy as np

from cecpoly.verify import scan_unimodality, unimodality_corpus

# %%
report = scan_unimodality(unimodality_corpus())
print(report.summary())

# %%
# Where does the peak sit relative to the span of the polynomial?
for e in report.entries[-8:]:
    c = np.array(e.poly.coeffs[e.poly.min_exp :], dtype=float)
    print(f"{e.graph:24s} peak at {np.argmax(c) / max(len(c) - 1, 1):.2f} of the span")
