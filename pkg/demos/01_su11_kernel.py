"""The rank-one picture: weighted Bergman norms on the unit disc.

For SU(1,1) the K-types are the monomials w^m.  The lambda-norm of w^m
divided by its Fischer norm m! is 1/(lambda)_m, so the reproducing kernel
is sum (lambda)_m / m! z^m conj(w)^m.  Below we print the ratios, confirm
them against a direct radial integral, and read off where the kernel stays
positive definite.
"""

from fractions import Fraction

from hwnorm import decompose_upto, kernel_coeff, make_fiber, norm_ratio, structure_constants
from hwnorm.analysis import filtration, subquotient_report, unitary_set
from hwnorm.oracle import su11_integral_check

spec = structure_constants("su", q=1, s=1)
fiber = make_fiber(spec, 0)

print("Norm ratios and kernel coefficients:")
for t in decompose_upto(spec, fiber, 4):
    print(f"  w^{t.n[0]}:  R = {norm_ratio(spec, fiber, t).ratio}   1/R = {kernel_coeff(spec, fiber, t)}")

for lam in (3, 4):
    report = su11_integral_check(lam, m_max=5, tol=1e-6)
    print(f"Quadrature at lambda={lam}: {'agrees' if report.passed else report.witnesses}")

print("Unitary parameters:", unitary_set(spec, fiber))

lam = Fraction(-2)
filt = filtration(spec, fiber, lam)
print(f"At lambda={lam} the chain is {filt.levels}; the first level holds polynomials of degree <= 2.")
for info in subquotient_report(spec, fiber, lam):
    print(f"  level {info.level}: GK dimension {info.gk_dim}  ({info.label})")
