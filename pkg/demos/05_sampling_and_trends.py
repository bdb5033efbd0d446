"""Tail bounds and seeded sampling beyond enumerable lengths.

Exact binomial tails sit below the certified 2.7/n^(c-1/2) curve; Monte
Carlo estimates of the mean open and spherical areas, normalized by
n (ln n)^2, show no growth across a decade of lengths.
"""

import math

from dehnlab import (
    bound_fit,
    builtin_presentation,
    h_split_holds,
    make_combing,
    osmean_sampled,
    smean_sampled,
    tail_bound_1d,
    tail_count_exact_1d,
    tail_report_sampled_zr,
)

print("one-dimensional tails: exact binomial fraction vs certified bound (c = 2)")
for n in (16, 64, 256, 1024):
    ell = 2.0 * math.sqrt(n * math.log(n))
    frac = tail_count_exact_1d(n, ell) / 2**n
    print(f"  n={n:>5}:  exact {frac:.3e}  <=  bound {tail_bound_1d(n, 2.0):.3e}")

print()
print("lattice endpoint tail at n=1000, c=2 (Monte Carlo, 10^5 samples):")
rep = tail_report_sampled_zr(2, 1000, 2.0, 100_000, seed=20250809)
print(f"  threshold {rep.threshold:.1f}, observed fraction {rep.fraction:.2e}, "
      f"bound {rep.bound_value:.2e}, holds: {rep.holds}")

print()
z2 = builtin_presentation("z2")
st = make_combing(z2, "staircase")
print("sampled mean open and spherical areas, 4000 samples per length:")
ns = (64, 128, 256, 512, 1024)
os_reports = []
sm_reports = []
for i, n in enumerate(ns):
    ro = osmean_sampled(z2, st, n, 4000, seed=100 + i)
    rs = smean_sampled(z2, st, n, 4000, seed=200 + i)
    os_reports.append(ro)
    sm_reports.append(rs)
    print(f"  n={n:>5}:  osmean {ro.estimate:>9.2f} (+-{(ro.ci_high - ro.ci_low) / 2:.2f})"
          f"   smean {rs.estimate:>9.2f} (+-{(rs.ci_high - rs.ci_low) / 2:.2f})"
          f"   osmean/(n ln^2 n) = {ro.normalized:.5f}")

for name, reports in (("osmean", os_reports), ("smean", sm_reports)):
    fit = bound_fit(reports)
    print(f"  {name}: normalized trend slope over ln n = {fit.slope:+.2e} "
          f"+- {fit.slope_stderr:.2e}  (no growth: {fit.no_growth})")

print()
print("the splitting inequality 2h((n+1)/2) + n ln n <= h(n) for h = n (ln n)^2")
print("turns on exactly at n = 15:")
for n in (13, 14, 15, 16, 100):
    print(f"  n={n:>3}: {h_split_holds(n)}")
