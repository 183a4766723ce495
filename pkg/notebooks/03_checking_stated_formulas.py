"""
Checking stated formulas against ground truth
=============================================

Each registered claim is adjudicated against enumeration (or the calibrated
engine) and gets a verdict.  Some are expected to fail.
"""

# %%
from cecpoly.verify import emit_report, run_claims

# %%
reports = run_claims(["thm-cycle", "thm-k2n", "thm-friendship", "thm-fan", "thm-cocktail-n3-coefficients", "thm-cocktail-n3-total"])
print(emit_report(reports))

# %%
# The fan formula fails at the smallest case it covers.
fan = next(r for r in reports if r.claim_id == "thm-fan")
print(fan.witness_params, fan.asserted, fan.ground_truth)

# %%
# The wheel recurrence reproduces its initial values but not W_7.
print(emit_report(run_claims(["thm-wheel-initial", "thm-wheel-recurrence", "thm-wheel-algebra"])))
