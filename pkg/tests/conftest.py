import hypothesis
import pytest

from fractile import BOTTOM, Coefficients, LocalRule, carpet_system, delannoy_rule

hypothesis.settings.register_profile(
    "default", deadline=None, max_examples=30)
hypothesis.settings.load_profile("default")

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def reference_corner_matrix(a: int, b: int, c: int, p: int,
                            height: int, width: int) -> list[list[int]]:
    """Definitional double loop over the recursion, kept independent of
    the library's vectorized generator."""
    m = [[0] * width for _ in range(height)]
    m[0][0] = 1
    for j in range(1, width):
        m[0][j] = m[0][j - 1] * a % p
    for i in range(1, height):
        m[i][0] = m[i - 1][0] * c % p
    for i in range(1, height):
        for j in range(1, width):
            m[i][j] = (a * m[i][j - 1] + b * m[i - 1][j - 1]
                       + c * m[i - 1][j]) % p
    return m


def window_sum_rule() -> LocalRule:
    """An n = 3 rule: parity of all defined window entries, except that
    the all-bottom window (the corner) yields 1."""

    def evaluate(west, south):
        defined = [v for v in west if v is not BOTTOM]
        defined += [v for row in south for v in row if v is not BOTTOM]
        if not defined:
            return 1
        return sum(defined) % 2

    return LocalRule(3, (0, 1), evaluate, name="window-sum-mod2")


@pytest.fixture(scope="session")
def carpet():
    return carpet_system()


@pytest.fixture(scope="session")
def carpet_rule():
    return delannoy_rule(Coefficients(1, 1, 1, 3))
