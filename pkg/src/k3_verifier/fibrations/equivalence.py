# Standard Library
import logging

# First Party
from k3_verifier.errors import Mismatch, ZeroInput
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.fibrations.weierstrass import WeierstrassModel

logger = logging.getLogger(__name__)


def _is_monomial_in(value: JElem, variable: str) -> bool:
    parts = [part for part in (value.p, value.q, value.den) if not part.is_zero()]
    if any(part.degree(variable) != part.low_degree(variable) for part in parts):
        return False
    if value.p.is_zero() or value.q.is_zero():
        return True
    return value.p.degree(variable) == value.q.degree(variable)


def _scale_candidate(source: WeierstrassModel, target: WeierstrassModel) -> JElem:
    """mu with target = source.rescaled(mu), read off the first coefficient pair that determines it."""
    a2, a4, a6 = source.coefficients()
    b2, b4, b6 = target.coefficients()
    if not a2.is_zero() and not b2.is_zero():
        return b2 / a2
    if not a4.is_zero() and not b4.is_zero() and not a6.is_zero() and not b6.is_zero():
        return (b6 / a6) / (b4 / a4)
    if a2.is_zero() and b2.is_zero() and a4.is_zero() and b4.is_zero() and a6.is_zero() and b6.is_zero():
        return JElem(1)
    raise Mismatch(f"{source.name} and {target.name} have incompatible zero patterns")


def equivalence_check(source: WeierstrassModel, target: WeierstrassModel) -> JElem:
    """The scale mu of x -> mu x, y -> mu^(3/2) y carrying ``source`` to ``target`` on the same base."""
    if source.variable != target.variable:
        raise Mismatch(f"base variables differ: {source.variable} and {target.variable}")
    zeros = [coefficient.is_zero() for coefficient in source.coefficients()]
    if zeros != [coefficient.is_zero() for coefficient in target.coefficients()]:
        raise Mismatch(f"{source.name} and {target.name} have different vanishing coefficients")
    try:
        mu = _scale_candidate(source, target)
    except ZeroInput as error:
        raise Mismatch(f"no scale between {source.name} and {target.name}: {error}") from error
    if mu.is_zero() or not _is_monomial_in(mu, source.variable):
        raise Mismatch(f"scale {mu} between {source.name} and {target.name} is not a monomial in {source.variable}")
    if source.rescaled(mu).coefficients() != target.coefficients():
        raise Mismatch(f"{target.name} is not a rescaling of {source.name}")
    logger.debug(f"{source.name} ~ {target.name} with x -> ({mu}) x")
    return mu
