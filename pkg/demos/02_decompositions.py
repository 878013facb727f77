"""K-type decompositions of P(p+) tensor V and the graded dimension count.

Every family comes with its own branching rule.  Summing multiplicity times
dimension over the K-types of degree N must give binom(N+n-1, N) dim V; the
oracle recomputes each dimension from its signature.
"""

from fractions import Fraction

from hwnorm import decompose, make_fiber, structure_constants
from hwnorm.catalog import Kind
from hwnorm.oracle import graded_dim_check

cases = [
    ("sp", {"r": 2}, 1, Kind.SYM_DUAL),
    ("su", {"q": 2, "s": 2}, (2, 1), Kind.SYM_DUAL),
    ("sostar", {"s": 5}, 1, Kind.SYM_DET),
    ("spin", {"n": 7}, Fraction(1, 2), Kind.SYM_DUAL),
    ("e6", {}, 1, Kind.SYM_DUAL),
]

for family, params, k, kind in cases:
    spec = structure_constants(family, **params)
    fiber = make_fiber(spec, k, kind)
    print(f"{spec.label()}  fiber k={k}  (r={spec.r}, d={spec.d}, b={spec.b}, n={spec.n}, p={spec.p})")
    for t in decompose(spec, fiber, 2):
        blocks = " ".join("(" + ",".join(str(x) for x in block) + ")" for block in t.signature)
        print(f"    degree 2: {blocks}  mult {t.multiplicity}  dim {t.dim}")
    check = graded_dim_check(spec, fiber, 6)
    print(f"    graded dimension identity to degree 6: {'ok' if check.passed else check.witnesses}")
