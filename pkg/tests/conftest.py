import random
from fractions import Fraction

import pytest

from esacert.exact import RationalPolynomial


def rand_fraction(rng: random.Random, lo: int = -20, hi: int = 20,
                  max_den: int = 12) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_poly(rng: random.Random, degree: int, coeff_range: int = 9) -> RationalPolynomial:
    while True:
        coeffs = [Fraction(rng.randint(-coeff_range, coeff_range),
                           rng.randint(1, 4)) for _ in range(degree + 1)]
        if coeffs[-1] != 0:
            return RationalPolynomial(coeffs)


@pytest.fixture
def rng():
    return random.Random(20260810)
