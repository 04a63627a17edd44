"""Randomized verification: every inequality, hammered with random inputs.

Draws random density matrices with random Hermitian triples (plus
tensor-product instances where the third observable exactly commutes) and
checks the commutator floor, the pair bound, the N=3 determinant
inequality, Gram positivity, and both forms of the coupled bound.  The
summary includes how often the coupled bound actually beats the pair bound.

Run:
    URBOUNDS_THREADS=4 python3 demos/random_verification.py
"""

from urbounds import run_sweep, thread_budget

result = run_sweep(seed=0, trials=500, max_dim=8, threads=thread_budget())
print("\n".join(result.summary_lines()))
print()
print("sample of per-instance rows (seed,product,robertson,rs,new,commuting,best,slack):")
for row in result.csv_rows[:5]:
    print(" ", row)
