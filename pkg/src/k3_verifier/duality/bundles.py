# Standard Library
import logging
from collections.abc import Sequence

# Third Party
from sympy import Integer, linsolve, symbols

# First Party
from k3_verifier.errors import InconsistentSystem

logger = logging.getLogger(__name__)

# each term (coefficient of L, coefficient of M, constant) in units of the line bundle on the base curve;
# all terms of one chain are equal
Term = tuple[int, int, int]

BUNDLE_CHAINS: tuple[tuple[Term, ...], ...] = (
    ((4, 0, 0), (0, 4, 4), (0, 3, 10), (0, 2, 16)),
    ((6, 0, 0), (0, 7, 0), (0, 6, 6), (0, 5, 12), (0, 4, 18), (0, 3, 24)),
)


def susy_bundle_exponents(chains: Sequence[Sequence[Term]] = BUNDLE_CHAINS) -> tuple[int, int]:
    """(M, L) with every chain of exponent equalities satisfied; (6, 7) for the shipped chains."""
    big_l, big_m = symbols("L M")
    equations = []
    for chain in chains:
        expressions = [a * big_l + b * big_m + c for a, b, c in chain]
        equations += [expressions[0] - other for other in expressions[1:]]
    solutions = linsolve(equations, [big_l, big_m])
    if solutions.is_empty:
        raise InconsistentSystem("the bundle exponent relations have no common solution")
    ((l_value, m_value),) = solutions
    if not (isinstance(l_value, Integer) and isinstance(m_value, Integer)):
        raise InconsistentSystem(f"the bundle exponents are not determined integers: L = {l_value}, M = {m_value}")
    logger.info(f"bundle exponents M = {m_value}, L = {l_value}")
    return int(m_value), int(l_value)
