# Standard Library
import logging
from collections.abc import Mapping
from fractions import Fraction

# First Party
from k3_verifier.errors import NotDivisible, ZeroInput
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.mpoly import MPoly, Scalar

logger = logging.getLogger(__name__)

GENERATOR = "a"

J2, J3, J4, J5, J6 = mpoly.symbols("J2", "J3", "J4", "J5", "J6")
DEFAULT_RELATION = J5**2 - 4 * J4 * J6


def reduce_a(poly: MPoly, relation: MPoly = DEFAULT_RELATION) -> tuple[MPoly, MPoly]:
    """Split ``poly`` into (p, q) with poly = p + q*a modulo a^2 = relation."""
    if GENERATOR not in poly.variables():
        return poly, MPoly.zero()
    even = MPoly.zero()
    odd = MPoly.zero()
    power = MPoly.one()
    for exponent, coeff in enumerate(poly.coefficients(GENERATOR)):
        if exponent % 2 == 0:
            if exponent:
                power = power * relation
            even = even + coeff * power
        else:
            odd = odd + coeff * power
    return even, odd


def _monomial_gcd(den: MPoly, others: list[MPoly]) -> MPoly:
    common = MPoly.one()
    for name in den.variables():
        exponent = den.low_degree(name)
        for poly in others:
            if not poly.is_zero():
                exponent = min(exponent, poly.low_degree(name))
        if exponent:
            common = common * MPoly.var(name) ** exponent
    return common


class JElem:
    """Element (p + q*a)/den of the fraction field of the J-ring extended by a.

    ``p``, ``q`` and ``den`` never involve ``a``; the relation a^2 = J5^2 - 4*J4*J6 (or the
    relation inherited through a substitution) is applied on construction. Extra
    indeterminates such as the base variable ``t`` may appear in ``p`` and ``q``.
    """

    __slots__ = ("_p", "_q", "_den", "_relation")

    def __init__(
        self,
        p: MPoly | Scalar = 0,
        q: MPoly | Scalar = 0,
        den: MPoly | Scalar = 1,
        relation: MPoly | None = None,
    ):
        p, q, den = MPoly.coerce(p), MPoly.coerce(q), MPoly.coerce(den)
        if den.is_zero():
            raise ZeroInput("zero denominator")
        self._relation = DEFAULT_RELATION if relation is None else relation
        if p.is_zero() and q.is_zero():
            self._p, self._q, self._den = p, q, MPoly.one()
            return
        if not den.is_constant():
            if len(den) == 1:
                common = _monomial_gcd(den, [p, q])
            else:
                common = mpoly.gcd(den, mpoly.gcd(p, q))
            if not common.is_constant():
                p, q, den = p / common, q / common, den / common
        unit = den.content()
        if den.leading_term_coefficient() < 0:
            unit = -unit
        if unit != 1:
            scale = 1 / unit
            p, q, den = p * scale, q * scale, den * scale
        self._p, self._q, self._den = p, q, den

    # construction

    @classmethod
    def from_poly(cls, poly: MPoly | Scalar, relation: MPoly | None = None) -> "JElem":
        relation = DEFAULT_RELATION if relation is None else relation
        p, q = reduce_a(MPoly.coerce(poly), relation)
        return cls(p, q, 1, relation)

    @classmethod
    def var(cls, name: str) -> "JElem":
        if name == GENERATOR:
            return cls(0, 1)
        return cls(MPoly.var(name))

    @staticmethod
    def coerce(value: "JElem | MPoly | Scalar") -> "JElem":
        if isinstance(value, JElem):
            return value
        if isinstance(value, MPoly):
            return JElem.from_poly(value)
        if isinstance(value, int | Fraction):
            return JElem(value)
        raise TypeError(f"cannot interpret {value!r} as a J-ring element")

    # structure

    @property
    def p(self) -> MPoly:
        return self._p

    @property
    def q(self) -> MPoly:
        return self._q

    @property
    def den(self) -> MPoly:
        return self._den

    @property
    def relation(self) -> MPoly:
        return self._relation

    def is_zero(self) -> bool:
        return self._p.is_zero() and self._q.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def involves_a(self) -> bool:
        return not self._q.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_constant() and not self.involves_a()

    def as_mpoly(self) -> MPoly:
        """The element as a polynomial; fails when it involves ``a`` or a denominator."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self._p * (1 / self._den.constant_value())

    def numerator(self) -> MPoly:
        """p + q*a with ``a`` as a plain indeterminate."""
        if self._q.is_zero():
            return self._p
        return self._p + self._q * MPoly.var(GENERATOR)

    def variables(self) -> tuple[str, ...]:
        names = self._p.variables() + self._q.variables() + self._den.variables()
        if self.involves_a():
            names = names + (GENERATOR,)
        return mpoly.canonical_names(names)

    def is_constant(self) -> bool:
        return not self.variables()

    def constant_value(self) -> Fraction:
        return self.as_mpoly().constant_value()

    def _check_polynomial_in(self, name: str) -> None:
        if name in self._den.variables():
            raise ValueError(f"denominator of {self} involves {name}")

    # arithmetic

    def _common_relation(self, other: "JElem") -> MPoly:
        if not other.involves_a() or self._relation is other._relation:
            return self._relation
        if not self.involves_a():
            return other._relation
        if self._relation != other._relation:
            raise ValueError("elements from different extension rings")
        return self._relation

    def __add__(self, other):
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        relation = self._common_relation(other)
        if self._den == other._den:
            return JElem(self._p + other._p, self._q + other._q, self._den, relation)
        return JElem(
            self._p * other._den + other._p * self._den,
            self._q * other._den + other._q * self._den,
            self._den * other._den,
            relation,
        )

    __radd__ = __add__

    def __neg__(self) -> "JElem":
        return JElem(-self._p, -self._q, self._den, self._relation)

    def __sub__(self, other):
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int | Fraction):
            return JElem(self._p * other, self._q * other, self._den, self._relation)
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        relation = self._common_relation(other)
        p = self._p * other._p
        if self.involves_a() and other.involves_a():
            p = p + self._q * other._q * relation
        q = self._p * other._q + self._q * other._p
        return JElem(p, q, self._den * other._den, relation)

    __rmul__ = __mul__

    def conjugate(self) -> "JElem":
        return JElem(self._p, -self._q, self._den, self._relation)

    def norm(self) -> "JElem":
        """(p^2 - q^2*relation)/den^2, the product with the conjugate."""
        return JElem(self._p**2 - self._q**2 * self._relation, 0, self._den**2, self._relation)

    def inverse(self) -> "JElem":
        if self.is_zero():
            raise ZeroInput("inverse of zero")
        if not self.involves_a():
            return JElem(self._den, 0, self._p, self._relation)
        norm = self._p**2 - self._q**2 * self._relation
        if norm.is_zero():
            raise ZeroInput(f"{self} is a zero divisor modulo the relation")
        return JElem(self._den * self._p, -(self._den * self._q), norm, self._relation)

    def __truediv__(self, other):
        if isinstance(other, int | Fraction):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "JElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = JElem(1, 0, 1, self._relation)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        try:
            other = JElem.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == other._den:
            return self._p == other._p and self._q == other._q
        return self._p * other._den == other._p * self._den and self._q * other._den == other._q * self._den

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._den))

    # polynomial structure in one variable

    def degree(self, name: str) -> int:
        self._check_polynomial_in(name)
        return max(self._p.degree(name), self._q.degree(name))

    def low_degree(self, name: str) -> int:
        self._check_polynomial_in(name)
        if self._p.is_zero():
            return self._q.low_degree(name)
        if self._q.is_zero():
            return self._p.low_degree(name)
        return min(self._p.low_degree(name), self._q.low_degree(name))

    def coeff(self, name: str, power: int) -> "JElem":
        self._check_polynomial_in(name)
        return JElem(self._p.coeff(name, power), self._q.coeff(name, power), self._den, self._relation)

    def coefficients(self, name: str) -> list["JElem"]:
        return [self.coeff(name, power) for power in range(self.degree(name) + 1)]

    def leading_coefficient(self, name: str) -> "JElem":
        return self.coeff(name, self.degree(name))

    def shift_down(self, name: str, power: int) -> "JElem":
        """Exact division by name^power."""
        divisor = MPoly.var(name) ** power
        return JElem(self._p / divisor, self._q / divisor, self._den, self._relation)

    # substitution

    def _composed_relation(self, values: Mapping[str, "JElem"]) -> MPoly:
        for value in values.values():
            if value.involves_a():
                return value._relation
        touched = {name: values[name] for name in self._relation.variables() if name in values}
        if not touched:
            return self._relation
        return self._relation.compose({name: value.as_mpoly() for name, value in touched.items()})

    def compose(self, mapping: Mapping[str, "JElem | MPoly | Scalar"]) -> "JElem":
        """Substitute indeterminates (``a`` included) by J-ring elements, all at once."""
        values = {name: JElem.coerce(value) for name, value in mapping.items()}
        if not values:
            return self
        relation = self._composed_relation(values)
        numerator = _substitute(self.numerator(), values, relation)
        if self._den.is_constant():
            return numerator * (1 / self._den.constant_value())
        return numerator / _substitute(self._den, values, relation)

    def evaluate(self, values: Mapping[str, Scalar]) -> "JElem":
        return self.compose(values)

    # text

    def to_text(self) -> str:
        if self.involves_a():
            body = f"({self._p.to_text()}) + ({self._q.to_text()})*{GENERATOR}"
        else:
            body = self._p.to_text()
        if self._den == 1:
            return body
        return f"({body})/({self._den.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"JElem({self.to_text()!r})"


def _substitute(poly: MPoly, values: Mapping[str, JElem], relation: MPoly) -> JElem:
    relevant = [name for name in poly.variables() if name in values]
    if not relevant:
        return JElem.from_poly(poly, relation)
    if all(values[name].den.is_constant() for name in relevant):
        images = {name: values[name].numerator() * (1 / values[name].den.constant_value()) for name in relevant}
        return JElem.from_poly(poly.compose(images), relation)
    # clear denominators: each term gets den_i^(e_i - k_i), the whole by prod den_i^e_i
    degrees = {name: poly.degree(name) for name in relevant}
    placeholders = {name: f"_den_{name}" for name in relevant}
    homogenized = {}
    for monomial, coeff in poly.terms().items():
        exponents = dict(monomial)
        extended = list(monomial)
        for name in relevant:
            missing = degrees[name] - exponents.get(name, 0)
            if missing:
                extended.append((placeholders[name], missing))
        homogenized[tuple(extended)] = coeff
    images = {name: values[name].numerator() for name in relevant}
    images.update({placeholders[name]: values[name].den for name in relevant})
    numerator = MPoly.from_terms(homogenized).compose(images)
    denominator = MPoly.one()
    for name in relevant:
        denominator = denominator * values[name].den ** degrees[name]
    return JElem.from_poly(numerator, relation) / JElem(denominator, 0, 1, relation)


def _unified_relation(*elements: JElem) -> MPoly:
    for element in elements:
        if element.involves_a():
            return element.relation
    return elements[0].relation


def resultant(p: JElem, q: JElem, name: str) -> JElem:
    """Res_name(p, q) computed on numerators with ``a`` free, then reduced."""
    relation = _unified_relation(p, q)
    left, right = p.numerator(), q.numerator()
    raw = mpoly.resultant(left, right, name)
    value = JElem.from_poly(raw, relation)
    scale = p.den ** right.degree(name) * q.den ** left.degree(name)
    return value / JElem(scale, 0, 1, relation)


def discriminant(p: JElem, name: str) -> JElem:
    numerator = p.numerator()
    degree = numerator.degree(name)
    raw = mpoly.discriminant(numerator, name)
    value = JElem.from_poly(raw, p.relation)
    return value / JElem(p.den ** (2 * degree - 2), 0, 1, p.relation)


def divmod_in(name: str, p: JElem, q: JElem) -> tuple[JElem, JElem]:
    """Long division in ``name`` over the coefficient field."""
    if q.is_zero():
        raise ZeroInput("division by zero in polynomial long division")
    divisor_degree = q.degree(name)
    inverse_lead = q.leading_coefficient(name).inverse()
    quotient = JElem(0, 0, 1, q.relation)
    remainder = p
    variable = JElem.var(name)
    while not remainder.is_zero() and remainder.degree(name) >= divisor_degree:
        shift = remainder.degree(name) - divisor_degree
        term = remainder.leading_coefficient(name) * inverse_lead * variable**shift
        quotient = quotient + term
        remainder = remainder - term * q
    return quotient, remainder


def divides_in(name: str, q: JElem, p: JElem) -> bool:
    return divmod_in(name, p, q)[1].is_zero()


def exact_quotient_in(name: str, p: JElem, q: JElem) -> JElem:
    quotient, remainder = divmod_in(name, p, q)
    if not remainder.is_zero():
        raise NotDivisible(f"{q} does not divide {p} in {name}")
    return quotient


def multiplicity_in(name: str, q: JElem, p: JElem) -> int:
    """Largest m with q^m dividing p, as polynomials in ``name``."""
    if p.is_zero():
        raise ZeroInput("multiplicity in the zero polynomial")
    if q.degree(name) < 1:
        raise ValueError(f"{q} has no positive degree in {name}")
    if q == JElem.var(name):
        return p.low_degree(name)
    count = 0
    quotient, remainder = divmod_in(name, p, q)
    while remainder.is_zero():
        count += 1
        quotient, remainder = divmod_in(name, quotient, q)
    return count
