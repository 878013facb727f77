"""Reducibility points, submodule chains and their Gelfand-Kirillov dimensions.

At a reducible lambda the K-types split by the order of the pole of R.  The
level inequalities cut out the same levels; each layer has the GK dimension
of a nilpotent orbit closure.  One point per family shows the chain.
"""

from fractions import Fraction

from hwnorm import make_fiber, structure_constants
from hwnorm.analysis import filtration_pole_check, filtration_report
from hwnorm.catalog import Kind

cases = [("sp", {"r": 3}, 0, Kind.SYM_DUAL, Fraction(1)),
         ("su", {"q": 2, "s": 3}, (0, 0, 0), Kind.SYM_DUAL, Fraction(-1)),
         ("sostar", {"s": 5}, 1, Kind.SYM_DET, Fraction(-2)),
         ("spin", {"n": 8}, 0, Kind.SYM_DUAL, Fraction(-1)),
         ("sp", {"r": 2}, 1, Kind.SYM_DUAL, Fraction(0))]

for family, params, k, kind, lam in cases:
    spec = structure_constants(family, **params)
    fiber = make_fiber(spec, k, kind)
    rep = filtration_report(spec, fiber, lam)
    check = filtration_pole_check(spec, fiber, lam, 8)
    print(f"{spec.label()} k={k} lambda={lam}: pole orders match the inequalities: {check.passed}")
    if not rep["chain"]:
        print("    the case table gives a > b, so the chain is empty and no R has a pole here")
    for level in rep["chain"]:
        print(f"    M_{level['j']}: {level['predicate']:<22} GK {level['gk_dim']:>2}"
              f"{'  unitary' if level['unitary'] else ''}")
    print(f"    top quotient: GK {rep['quotient']['gk_dim']}{'  unitary' if rep['quotient']['unitary'] else ''}")
