import random

import pytest

from mriordan import Series, aerate, new_element
from mriordan.documents import element_from_doc
from mriordan.golden import EXAMPLE1_DOC, EXAMPLE2_DOC, EXAMPLE3_DOC


@pytest.fixture(scope="session")
def example1():
    return element_from_doc(EXAMPLE1_DOC)


@pytest.fixture(scope="session")
def example2():
    return element_from_doc(EXAMPLE2_DOC)


@pytest.fixture(scope="session")
def example3():
    return element_from_doc(EXAMPLE3_DOC)


def random_proper_element(rng: random.Random, m: int, order: int, span: int = 2):
    """Random proper element with small integer coefficients."""
    nc = order // m
    ghat = Series([1] + [rng.randint(-span, span) for _ in range(nc)])
    g = aerate(ghat, m, 0, order=order)
    f = []
    for _ in range(m):
        fhat = Series([1] + [rng.randint(-span, span) for _ in range((order - 1) // m)])
        f.append(aerate(fhat, m, 1, order=order))
    return new_element(m, g, f, order)


def random_rational_element(rng: random.Random, m: int, order: int):
    """Proper element with genuinely rational (non-integer) coefficients."""
    from fractions import Fraction

    nc = order // m
    def coeff():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    ghat = Series([1] + [coeff() for _ in range(nc)])
    g = aerate(ghat, m, 0, order=order)
    f = []
    for _ in range(m):
        fhat = Series([1] + [coeff() for _ in range((order - 1) // m)])
        f.append(aerate(fhat, m, 1, order=order))
    return new_element(m, g, f, order)
