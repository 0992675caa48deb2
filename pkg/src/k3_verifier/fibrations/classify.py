# Standard Library
import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

# First Party
from k3_verifier.constants import PICARD_RANK
from k3_verifier.errors import (
    DegenerateSpecialization,
    EulerMismatch,
    Inconsistent,
    NotDivisible,
    ResidualNotSquarefree,
    ZeroInput,
    ZeroPolynomial,
)
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.jelem import DEFAULT_RELATION, GENERATOR, JElem, exact_quotient_in
from k3_verifier.exactalg.mpoly import MPoly, Scalar
from k3_verifier.fibrations.weierstrass import (
    FiberPlace,
    WeierstrassModel,
    ade_label,
    euler_number,
    kodaira_from_orders,
    root_rank,
    short_form,
    vanishing_orders,
    weierstrass_disc,
)
from k3_verifier.lattices.frames import (
    LatticeIsomorphismClass,
    mw_torsion_from_frame,
    polarization_class,
    shioda_tate_rank,
)
from k3_verifier.lattices.lattice import ade_lattice, sum_of
from k3_verifier.lattices.quadratic_form import group_label
from k3_verifier.model import FiberConfigReport, FiberEntry

logger = logging.getLogger(__name__)

K3_EULER = 24
TORSION_ROOT_DEGREE = 4

# (J2, J3, J4, delta, zeta): J5 = zeta + J4*delta, J6 = delta*zeta and a = zeta - J4*delta
GAUGE_SAMPLES = (
    (2, 3, 5, 7, 11),
    (3, -2, 7, 5, -13),
    (-5, 7, 2, 3, 17),
    (7, 11, -3, 13, 5),
    (11, -13, 17, -7, 19),
    (13, 5, -11, 19, 23),
)
_FREE_SAMPLES = (29, 31, -37, 41, 43, -47, 53, 59, -61, 67, 71, 73)


@dataclass(frozen=True)
class SingularFiber:
    place: FiberPlace
    kodaira: str
    count: int
    orders: tuple[int, int, int]

    @property
    def ade(self) -> str:
        return ade_label(self.kodaira)

    @property
    def euler(self) -> int:
        return self.count * euler_number(self.kodaira)


@dataclass(frozen=True)
class FiberConfig:
    fibration: str
    fibers: tuple[SingularFiber, ...]
    mw_torsion: str
    mw_rank: int
    picard: int
    lattice: LatticeIsomorphismClass | None = None
    assignments: tuple[tuple[str, str], ...] = ()

    @property
    def euler(self) -> int:
        return sum(fiber.euler for fiber in self.fibers)

    def root_summands(self) -> list[str]:
        summands = []
        for fiber in self.fibers:
            if fiber.ade:
                summands += [fiber.ade] * fiber.count
        return summands

    def root_rank(self) -> int:
        return sum(root_rank(fiber.kodaira) * fiber.count for fiber in self.fibers)

    def kodaira_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for fiber in self.fibers:
            counts[fiber.kodaira] = counts.get(fiber.kodaira, 0) + fiber.count
        return counts

    def summary(self) -> str:
        return fiber_summary(self)

    def to_report(self) -> FiberConfigReport:
        return FiberConfigReport(
            fibration=self.fibration,
            assignments=dict(self.assignments),
            fibers=[
                FiberEntry(place=fiber.place.label(), kodaira=fiber.kodaira, ade=fiber.ade, count=fiber.count)
                for fiber in self.fibers
            ],
            mw_torsion=self.mw_torsion,
            mw_rank=self.mw_rank,
            euler=self.euler,
        )


def fiber_summary(config: FiberConfig) -> str:
    """Table notation such as "I8* + 2I2 + 6I1", larger Euler numbers first."""
    counts = config.kodaira_counts()
    ordered = sorted(counts, key=lambda kodaira: (-euler_number(kodaira), kodaira))
    return " + ".join(f"{counts[k]}{k}" if counts[k] > 1 else k for k in ordered)


# sample points


def sample_points(names: Sequence[str]) -> Iterator[dict[str, Fraction]]:
    """Deterministic rational points, consistent with a^2 = J5^2 - 4 J4 J6 when ``a`` occurs."""
    for index, (j2, j3, j4, delta, zeta) in enumerate(GAUGE_SAMPLES):
        gauge = {"J2": j2, "J3": j3, "J4": j4, "J5": zeta + j4 * delta, "J6": delta * zeta}
        gauge[GENERATOR] = zeta - j4 * delta
        point = {}
        free = itertools.cycle(_FREE_SAMPLES[index:] + _FREE_SAMPLES[:index])
        for name in names:
            point[name] = Fraction(gauge[name]) if name in gauge else Fraction(next(free))
        yield point


def _specialized(poly: JElem, point: Mapping[str, Fraction], variable: str) -> MPoly | None:
    try:
        value = poly.evaluate({name: point[name] for name in poly.variables() if name != variable})
    except ZeroInput:
        return None
    if not value.is_polynomial():
        return None
    return value.as_mpoly()


def certify_squarefree(residual: JElem, skeleton: Sequence[JElem], variable: str) -> None:
    """Squarefree and coprime to the skeleton over the parameter field, via a degree-preserving sample."""
    if residual.degree(variable) < 1:
        return
    names = sorted({name for poly in (residual, *skeleton) for name in poly.variables() if name != variable})
    if residual.relation != DEFAULT_RELATION and residual.involves_a():
        raise ResidualNotSquarefree("residual lives in an extension that cannot be sampled")
    for point in sample_points(names):
        sampled = _specialized(residual, point, variable)
        if sampled is None or sampled.degree(variable) != residual.degree(variable):
            continue
        factors = [(_specialized(q, point, variable), q) for q in skeleton]
        if any(value is None or value.degree(variable) != q.degree(variable) for value, q in factors):
            continue
        if sampled.degree(variable) >= 2 and mpoly.discriminant(sampled, variable).is_zero():
            continue
        if any(not mpoly.gcd(sampled, value).is_constant() for value, _ in factors):
            continue
        logger.debug(f"residual of degree {residual.degree(variable)} certified squarefree at {point}")
        return
    raise ResidualNotSquarefree(f"no sample point certifies the residual of degree {residual.degree(variable)}")


# fiber places


def _skeleton_fibers(model, f, g, disc, skeleton) -> list[SingularFiber]:
    variable = model.variable
    residual = disc
    fibers = []
    for factor in skeleton:
        place = FiberPlace.root_of(factor)
        orders = vanishing_orders(model, place, (f, g), disc)
        kodaira = kodaira_from_orders(*orders)
        if factor == JElem.var(variable):
            residual = residual.shift_down(variable, orders[2])
        else:
            residual = exact_quotient_in(variable, residual, factor ** orders[2])
        if kodaira != "I0":
            fibers.append(SingularFiber(place, kodaira, factor.degree(variable), orders))
    certify_squarefree(residual, skeleton, variable)
    if residual.degree(variable) >= 1:
        fibers.append(SingularFiber(FiberPlace.root_of(residual), "I1", residual.degree(variable), (0, 0, 1)))
    return fibers


def _places_fibers(model, f, g, disc, factors: Sequence[MPoly]) -> list[SingularFiber]:
    fibers = []
    for factor in factors:
        place = FiberPlace.root_of(factor)
        orders = vanishing_orders(model, place, (f, g), disc)
        kodaira = kodaira_from_orders(*orders)
        fibers.append(SingularFiber(place, kodaira, factor.degree(model.variable), orders))
    return fibers


def rational_places(disc: JElem, variable: str) -> list[MPoly]:
    """Irreducible factors over the rationals of a discriminant with rational coefficients."""
    poly = disc.as_mpoly()
    if poly.degree(variable) < 1:
        return []
    _, factors = mpoly.univariate_factors(poly, variable)
    return [factor for factor, _ in factors if factor.degree(variable) >= 1]


def _primitive_in(poly: MPoly, variable: str) -> MPoly:
    content = MPoly.zero()
    for coeff in poly.coefficients(variable):
        content = mpoly.gcd(content, coeff)
    return poly / content if not content.is_constant() else poly.normalized()


def squarefree_parts(poly: MPoly, variable: str) -> list[tuple[MPoly, int]]:
    """Yun's squarefree decomposition in ``variable`` over the field of the other indeterminates."""
    poly = _primitive_in(poly, variable)
    derivative = poly.diff(variable)
    common = mpoly.gcd(poly, derivative)
    b = poly / common
    d = derivative / common - b.diff(variable)
    parts = []
    multiplicity = 1
    while b.degree(variable) > 0:
        part = mpoly.gcd(b, d)
        if part.degree(variable) > 0:
            parts.append((part, multiplicity))
        b = b / part
        d = d / part - b.diff(variable)
        multiplicity += 1
    return parts


def symbolic_places(f: JElem, g: JElem, disc: JElem, variable: str) -> list[MPoly]:
    """Squarefree pieces of the discriminant split by common roots with f and g."""
    if any(poly.involves_a() for poly in (f, g, disc)):
        raise ValueError("symbolic places need a model free of the generator a; pass a skeleton")
    pieces = []
    for part, _ in squarefree_parts(disc.numerator(), variable):
        split = [part]
        for coefficient in (f, g):
            if coefficient.is_zero():
                continue
            refined = []
            for piece in split:
                common = mpoly.gcd(piece, coefficient.numerator())
                if common.degree(variable) > 0 and common.degree(variable) < piece.degree(variable):
                    refined += [common, piece / common]
                else:
                    refined.append(piece)
            split = refined
        pieces += split
    return pieces


# Mordell-Weil torsion


def _interpolate(points: Sequence[tuple[Fraction, Fraction]], variable: str) -> MPoly:
    result = MPoly.zero()
    t = MPoly.var(variable)
    for k, (tk, yk) in enumerate(points):
        term = MPoly.const(yk)
        for j, (tj, _) in enumerate(points):
            if j != k:
                term = term * (t - tj) * (1 / (tk - tj))
        result = result + term
    return result


def _rational_roots(cubic: MPoly, name: str) -> list[Fraction]:
    _, factors = mpoly.univariate_factors(cubic, name)
    roots = []
    for factor, _ in factors:
        if factor.degree(name) == 1:
            roots.append(-factor.coeff(name, 0).constant_value() / factor.coeff(name, 1).constant_value())
    return roots


def _polynomial_root(model: WeierstrassModel) -> MPoly | None:
    """A root x = r(t) of the cubic with deg r <= 4, by interpolating rational roots at sample fibers."""
    variable = model.variable
    x = MPoly.var("x")
    a2, a4, a6 = (coeff.as_mpoly() for coeff in model.coefficients())
    cubic = x**3 + a2 * x**2 + a4 * x + a6
    candidates = []
    for value in range(TORSION_ROOT_DEGREE + 1):
        fiber = cubic.evaluate({variable: value})
        roots = _rational_roots(fiber, "x")
        if not roots:
            return None
        candidates.append([(Fraction(value), root) for root in roots])
    for choice in itertools.product(*candidates):
        root = _interpolate(choice, variable)
        if cubic.compose({"x": root}).is_zero():
            return root
    return None


def two_torsion_present(model: WeierstrassModel) -> bool:
    """True when the cubic in x has a polynomial root in t (x | RHS for the symbolic models)."""
    if model.a6.is_zero():
        return True
    if model.is_rational():
        root = _polynomial_root(model)
        if root is not None:
            logger.debug(f"two-torsion section x = {root} on the {model.name} model")
            return True
    return False


def frame_torsion_check(summands: Sequence[str], torsion: tuple[int, ...]) -> LatticeIsomorphismClass | None:
    """Tabulated polarization lattice of the frame; the generic rank 14 frames are checked on their own."""
    if sum(int(summand[1:]) for summand in summands) == 14:
        root = sum_of([ade_lattice(summand[0], int(summand[1:])) for summand in summands])
        try:
            forced = mw_torsion_from_frame(root)
        except Inconsistent as error:
            logger.error(f"frame check failed: {error}")
            return None
        if forced != group_label(list(torsion), style="mw"):
            logger.error(f"torsion {torsion} of the model disagrees with the frame root lattice ({forced})")
            return None
    return polarization_class(summands, torsion)


# classification


def classify_fibers(
    model: WeierstrassModel,
    skeleton: Sequence[JElem] | None = None,
    picard: int | None = None,
    assignments: Mapping[str, str] | None = None,
) -> FiberConfig:
    """Singular fibers, Mordell-Weil data and polarization lattice of a Weierstrass model.

    Rational models are classified from the full factorization of the discriminant. Symbolic
    models use the given skeleton of known factors, the remaining residual is certified
    squarefree and contributes I1 fibers; without a skeleton a squarefree decomposition is used.
    """
    variable = model.variable
    f, g = short_form(model)
    disc = weierstrass_disc(model)
    if disc.is_zero():
        raise ZeroPolynomial(f"the {model.name} model has zero discriminant")
    if model.is_rational():
        fibers = _places_fibers(model, f, g, disc, rational_places(disc, variable))
    elif skeleton is not None:
        fibers = _skeleton_fibers(model, f, g, disc, skeleton)
    else:
        fibers = _places_fibers(model, f, g, disc, symbolic_places(f, g, disc, variable))
    infinity = vanishing_orders(model, FiberPlace.infinity(), (f, g), disc)
    kodaira = kodaira_from_orders(*infinity)
    if kodaira != "I0":
        fibers.append(SingularFiber(FiberPlace.infinity(), kodaira, 1, infinity))
    euler = sum(fiber.euler for fiber in fibers)
    if euler != K3_EULER:
        raise EulerMismatch(f"{model.name}: Euler numbers sum to {euler}, fibers {[fiber.kodaira for fiber in fibers]}")
    torsion = (2,) if two_torsion_present(model) else ()
    summands = []
    for fiber in fibers:
        if fiber.ade:
            summands += [fiber.ade] * fiber.count
    total = sum(root_rank(fiber.kodaira) * fiber.count for fiber in fibers)
    picard = picard if picard is not None else max(PICARD_RANK, 2 + total)
    config = FiberConfig(
        fibration=model.name,
        fibers=tuple(fibers),
        mw_torsion=group_label(list(torsion), style="mw"),
        mw_rank=shioda_tate_rank([root_rank(fiber.kodaira) for fiber in fibers for _ in range(fiber.count)], picard),
        picard=picard,
        lattice=frame_torsion_check(summands, torsion),
        assignments=tuple(sorted((assignments or {}).items())),
    )
    logger.info(f"{model.name}: {config.summary()}, MW {config.mw_torsion}")
    return config


def specialize(model: WeierstrassModel, assignment: Mapping[str, JElem | MPoly | Scalar]) -> WeierstrassModel:
    """Substitute J-parameters (and a) in the model, rejecting a vanishing discriminant."""
    values = {name: JElem.coerce(value) for name, value in assignment.items()}
    if GENERATOR in values:
        relation = JElem.from_poly(DEFAULT_RELATION).compose({k: v for k, v in values.items() if k != GENERATOR})
        if values[GENERATOR] ** 2 != relation:
            raise DegenerateSpecialization(f"a = {values[GENERATOR]} violates a^2 = J5^2 - 4 J4 J6 under {values}")
    try:
        specialized = model.compose(values)
    except (ZeroInput, NotDivisible) as error:
        raise DegenerateSpecialization(f"{model.name} cannot be specialized at {values}: {error}") from error
    if weierstrass_disc(specialized).is_zero():
        raise DegenerateSpecialization(f"{model.name} degenerates (zero discriminant) at {values}")
    return specialized
