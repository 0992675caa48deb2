# Standard Library
import logging

# First Party
from k3_verifier.errors import IdentityFailed, UnknownPencil
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.quartic.surface import COORDINATES, QuarticParams, curves

logger = logging.getLogger(__name__)

X, Y, Z, W = mpoly.symbols(*COORDINATES)
U, V = mpoly.symbols("u", "v")

PENCILS = ("L1", "L2", "L3", "C1", "C2", "C3", "LC3", "T")

# curves every member of each pencil contains
INCIDENCES = {
    "L1": ("L1",),
    "L2": ("L2",),
    "L3": ("L3",),
    "C1": ("L1", "L2", "L3"),
    "C2": ("L1", "L2"),
    "C3": ("R1",),
    "LC3": ("L1", "R1", "R2"),
    "T": ("L2", "L3", "R2"),
}


def _planes(params: QuarticParams) -> tuple[MPoly, MPoly]:
    _, _, gamma, delta, epsilon, zeta = params.as_mpolys()
    return 2 * gamma * X - delta * W, 2 * epsilon * X - zeta * W


def conic_pencil(params: QuarticParams, u: MPoly = U, v: MPoly = V) -> MPoly:
    """C3: the pencil of quadrics through the residual conic R1."""
    alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
    L, M = _planes(params)
    k = (
        6 * alpha * gamma * delta * epsilon * zeta
        + 4 * beta * gamma * delta * epsilon**2
        + 4 * beta * gamma**2 * epsilon * zeta
        + 2 * delta**2 * zeta**2
    )
    k_prime = 8 * beta * gamma**2 * epsilon**2 + 4 * delta**2 * epsilon * zeta + 4 * gamma * delta * zeta**2
    quadric = (
        2 * gamma**2 * delta * epsilon * zeta * X * Z
        + k * X * W
        - gamma * delta**2 * epsilon * zeta * Z * W
        + 2 * gamma * delta * epsilon * zeta * Y**2
        - k_prime * X**2
    )
    return v * quadric + u * L * M


def pencil(name: str, params: QuarticParams, u: MPoly | int = U, v: MPoly | int = V, printed: bool = False) -> MPoly:
    """Member (u : v) of the named pencil; symbolic in u, v by default.

    ``printed=True`` gives the T pencil with the sign C2 Z - L3 W^2, which misses R2.
    """
    u, v = MPoly.coerce(u), MPoly.coerce(v)
    _, _, gamma, delta, epsilon, zeta = params.as_mpolys()
    L, M = _planes(params)
    if name == "L1":
        return u * W - v * X
    if name == "L2":
        return u * W - v * Z
    if name == "L3":
        return u * Z - v * M
    if name == "C1":
        return v * W * M - u * Z * L
    if name == "C2":
        return v * Z * L - u * W**2
    if name == "C3":
        return conic_pencil(params, u, v)
    if name == "LC3":
        return L * conic_pencil(params, u, v)
    if name == "T":
        sign = -1 if printed else 1
        correction = pencil("C2", params, u, v) * Z + sign * pencil("L3", params, u, v) * W**2
        return conic_pencil(params, u, v) * Z - gamma * delta * epsilon * zeta * correction
    raise UnknownPencil(f"Pencil {name} is not one of {', '.join(PENCILS)}")


def contains(name: str, curve: str, params: QuarticParams, printed: bool = False) -> bool:
    parametrized = curves(params)[curve]
    return parametrized.contained_in(pencil(name, params, printed=printed))


def incidence_table(params: QuarticParams | None = None) -> dict[str, dict[str, bool]]:
    params = params or QuarticParams.symbolic()
    table = {}
    for name in PENCILS:
        table[name] = {curve: contains(name, curve, params) for curve in INCIDENCES[name]}
        logger.debug(f"pencil {name}: {table[name]}")
    return table


def verify_pencil_incidences(params: QuarticParams | None = None) -> dict[str, bool]:
    results = {}
    for name, row in incidence_table(params).items():
        for curve, holds in row.items():
            check = f"{name} contains {curve}"
            if not holds:
                raise IdentityFailed(check)
            results[check] = holds
    return results
