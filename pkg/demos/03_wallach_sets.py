"""Where is the analytically continued representation unitary?

The kernel coefficients 1/R are products of linear factors in lambda.  A
negative coefficient rules out unitarity; scanning a quarter-integer grid
recovers the continuous half-line and the discrete points of the closed form.
"""

from fractions import Fraction

from hwnorm import make_fiber, structure_constants, unitary_scan, unitary_set
from hwnorm.catalog import Kind, convergence_threshold

cases = [("sp", {"r": 3}, 1, Kind.SYM_DUAL), ("su", {"q": 2, "s": 3}, (1, 0, 0), Kind.SYM_DUAL),
         ("sostar", {"s": 6}, 2, Kind.SYM_DET), ("spin", {"n": 6}, 0, Kind.SYM_DUAL)]

for family, params, k, kind in cases:
    spec = structure_constants(family, **params)
    fiber = make_fiber(spec, k, kind)
    closed = unitary_set(spec, fiber)
    grid = [Fraction(j, 4) for j in range(-8, 4 * (spec.p + 1) + 1)]
    found = [lam for lam in grid if unitary_scan(spec, fiber, lam, 8).compatible]
    last_gap = max(lam for lam in grid if lam not in found)
    isolated = [str(lam) for lam in found if lam < last_gap]
    agree = all((lam in found) == (lam in closed) for lam in grid)
    print(f"{spec.label()} k={k}: closed form {closed}; holomorphic for lambda > "
          f"{convergence_threshold(spec, fiber)}")
    print(f"    scan: isolated points {isolated}, then every grid point above {last_gap}; "
          f"agrees with the closed form: {agree}")
