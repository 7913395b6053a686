"""Counting basis words and estimating the growth rate.

Run:  python3 demos/03_growth.py
"""
import mpmath
import numpy as np

from lie2pbw.counting import (
    ForbiddenFactorAutomaton, big_start_series, characteristic_polynomial_d2,
    count_series, growth_rate, verify_recurrence_d2,
)

for d in (1, 2, 3):
    print(f"d = {d}:", count_series(d, 12).values)

aut = ForbiddenFactorAutomaton(2)
M = aut.transfer_matrix()
print(f"automaton for d = 2: {len(aut.states)} states")
print("largest |eigenvalue| (float):", max(abs(np.linalg.eigvals(M.astype(float)))))

r = count_series(2, 30)
s = big_start_series(r)
print("s_n for d = 2:", s.values[:10])

expanded, factors, _ = characteristic_polynomial_d2()
print("(x-1)^2 (x+1)(x^3-x^2-2x-2) =", expanded)
print("recurrence from it holds up to n = 30:", bool(verify_recurrence_d2(r)))
printed = verify_recurrence_d2(r, (1, -2, -2, 2, 3, 0, -1))
print("with -r_(n-6) instead of -2 r_(n-6):", bool(printed),
      "residuals", [printed.residuals[n] for n in range(7, 12)])

for d in (1, 2, 3):
    print(f"growth rate d = {d}")
    methods = ["spectral_radius", "ratio", "nth_root"]
    if d < 3:
        methods.insert(0, "closed_form")
    for m in methods:
        est = growth_rate(d, m)
        print(f"  {m:16} {mpmath.nstr(est.value, 15)}")
