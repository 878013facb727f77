from fractions import Fraction

import pytest

from hwnorm.catalog import Kind, make_fiber, structure_constants


def group(family, **params):
    return structure_constants(family, **params)


def fiber(spec, k=0, kind="dual", sign=1):
    return make_fiber(spec, k, Kind(kind), sign)


@pytest.fixture
def half():
    return Fraction(1, 2)
