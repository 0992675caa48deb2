# Standard Library
import logging
from functools import lru_cache

# First Party
from k3_verifier.constants import ALT, BFD, FIBRATIONS, MAX, STD
from k3_verifier.exactalg.jelem import JElem, exact_quotient_in
from k3_verifier.fibrations.weierstrass import BASE, WeierstrassModel, weierstrass_disc

logger = logging.getLogger(__name__)

t = JElem.var(BASE)
J2, J3, J4, J5, J6 = (JElem.var(name) for name in ("J2", "J3", "J4", "J5", "J6"))
AA = JElem.var("a")


def alt_a() -> JElem:
    return t**3 - J2 * t * 3 - J3 * 2


def alt_b() -> JElem:
    return J4 * t**2 - J5 * t + J6


def alt_d() -> JElem:
    """A^2 - 4B, the degree six factor whose discriminant defines J30."""
    return (
        t**6
        - J2 * t**4 * 6
        - J3 * t**3 * 4
        + (J2**2 * 9 - J4 * 4) * t**2
        + (J2 * J3 * 12 + J5 * 4) * t
        + (J3**2 - J6) * 4
    )


def _std() -> WeierstrassModel:
    f = -(t**3) * ((J5 - AA) / (J6 * 2) * t**2 + J2 * t * 3 + (J5 + AA) / 2)
    g = t**5 * (t**2 - J3 * t * 2 + J6)
    return WeierstrassModel.short(STD, f, g)


def _alt() -> WeierstrassModel:
    return WeierstrassModel(ALT, alt_a(), alt_b(), JElem(0))


def _bfd() -> WeierstrassModel:
    f = t**2 * (-J2 * t**2 * 3 - J5 * t - J4**2 / 3)
    g = t**3 * (t**4 - J3 * t**3 * 2 + (J2 * J4 + J6) * t**2 + J4 * J5 * t / 3 + J4**3 * 2 / 27)
    return WeierstrassModel.short(BFD, f, g)


def _max() -> WeierstrassModel:
    a2 = J6 * (
        t**3
        + J3 * J4 * t**2 * 6
        + (J3**2 * J4**2 * 4 - J2 * J6**2) * t * 3
        - J3 * (J2 * J4 * J6**2 * 3 - J3**2 * J4**3 * 4 + J6**3) * 2
    )
    a4 = -(J6**6) * (
        J4 * t**2 * 2
        + (J3 * J4**2 * 8 + J5 * J6) * t
        + (J3**2 * J4**3 * 8 - J2 * J4 * J6**2 * 3 + J3 * J4 * J5 * J6 * 2 - J6**3)
    )
    a6 = J4 * J6**11 * (J4 * t + (J3 * J4**2 * 2 + J5 * J6))
    return WeierstrassModel(MAX, a2, a4, a6)


_BUILDERS = {STD: _std, ALT: _alt, BFD: _bfd, MAX: _max}


@lru_cache(maxsize=None)
def model(which: str) -> WeierstrassModel:
    """Weierstrass model of the named fibration over the ring of J2..J6 extended by a."""
    if which not in _BUILDERS:
        raise ValueError(f"Fibration {which} is not one of {', '.join(FIBRATIONS)}")
    return _BUILDERS[which]()


@lru_cache(maxsize=None)
def residual_factor(which: str) -> JElem:
    """The discriminant with its known fiber factors removed: p, D, P or d."""
    disc = weierstrass_disc(model(which))
    if which == STD:
        return disc.shift_down(BASE, 9) * J6**3
    if which == ALT:
        return exact_quotient_in(BASE, disc, alt_b() ** 2)
    if which == BFD:
        return disc.shift_down(BASE, 8)
    if which == MAX:
        return disc / J6**16
    raise ValueError(f"Fibration {which} is not one of {', '.join(FIBRATIONS)}")
