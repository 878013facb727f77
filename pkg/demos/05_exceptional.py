"""The exceptional domains: E7 in full, E6 with a known gap.

For E7 only the scalar fiber is treated and everything is exact.  For E6
with k > 0 the known result fixes each ratio only up to a monic
numerator; the conjectured closed form fills it in and is marked as such.
The normalizing constant is independent of the gap and matches its
recurrence solution exactly.
"""

from fractions import Fraction

from hwnorm import ConjecturalContentError, decompose, kernel_coeff, make_fiber, norm_ratio, normalizing_const
from hwnorm import structure_constants
from hwnorm.oracle import e6_recurrence_check

e7 = structure_constants("e7")
scalar = make_fiber(e7, 0)
print("E7 c_lambda =", normalizing_const(e7, scalar))
for t in decompose(e7, scalar, 2):
    print(f"    m={t.m}: R = {norm_ratio(e7, scalar, t).ratio}, dim {t.dim}")

e6 = structure_constants("e6")
fiber = make_fiber(e6, 1)
print("E6 k=1 c_lambda =", normalizing_const(e6, fiber))
for t in decompose(e6, fiber, 1):
    proven = norm_ratio(e6, fiber, t)
    try:
        kernel_coeff(e6, fiber, t)
        status = "known"
    except ConjecturalContentError:
        status = f"unknown monic numerator of degree {proven.unknown_numerator_degree}"
    conj = norm_ratio(e6, fiber, t, conjecture=True)
    print(f"    m={t.m} kappa={t.kappa}: {status}; conjectured R = {conj.ratio}")

for k in range(4):
    ok = e6_recurrence_check(k, [13, Fraction(27, 2), 15]).passed
    print(f"    recurrence check k={k}: {'exact match' if ok else 'mismatch'}")
