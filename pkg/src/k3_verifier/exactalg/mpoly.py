# Standard Library
import logging
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from math import gcd as integer_gcd

# Third Party
from sympy import Symbol
from sympy.polys.domains import QQ, ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

# First Party
from k3_verifier.errors import DegreeTooLow, NotDivisible, ZeroInput

logger = logging.getLogger(__name__)

Scalar = int | Fraction

# Registry order of indeterminates; unknown names sort after these, alphabetically.
KNOWN_VARIABLES = (
    "t",
    "u",
    "v",
    "s",
    "q",
    "x",
    "y",
    "z",
    "X",
    "Y",
    "Z",
    "W",
    "alpha",
    "beta",
    "gamma",
    "delta",
    "epsilon",
    "zeta",
    "lam",
    "J2",
    "J3",
    "J4",
    "J5",
    "J6",
    "a",
    "psi4",
    "psi6",
    "chi10",
    "chi12",
)
_KNOWN_INDEX = {name: index for index, name in enumerate(KNOWN_VARIABLES)}


def variable_sort_key(name: str) -> tuple[int, str]:
    return _KNOWN_INDEX.get(name, len(KNOWN_VARIABLES)), name


def canonical_names(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=variable_sort_key))


@lru_cache(maxsize=2048)
def polynomial_ring(names: tuple[str, ...], domain=QQ) -> PolyRing:
    return PolyRing(tuple(Symbol(name) for name in names), domain, grlex)


def to_ground(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


class MPoly:
    """Exact polynomial over the rationals with named indeterminates.

    Values are immutable. The underlying sparse representation lives in a sympy ring
    over exactly the names of the polynomial, ordered by the variable registry and
    compared in graded-lexicographic order, so equal polynomials share one representation.
    """

    __slots__ = ("_names", "_poly")

    def __init__(self, names: tuple[str, ...], poly):
        self._names = names
        self._poly = poly

    # construction

    @classmethod
    def var(cls, name: str) -> "MPoly":
        ring = polynomial_ring((name,))
        return cls((name,), ring.gens[0])

    @classmethod
    def const(cls, value: Scalar) -> "MPoly":
        ring = polynomial_ring(())
        return cls((), ring.ground_new(to_ground(value)))

    @classmethod
    def zero(cls) -> "MPoly":
        return cls.const(0)

    @classmethod
    def one(cls) -> "MPoly":
        return cls.const(1)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[tuple[str, int], ...], Scalar]) -> "MPoly":
        """Build from {((name, exponent), ...): coefficient}."""
        names = canonical_names(name for monomial in terms for name, _ in monomial)
        position = {name: index for index, name in enumerate(names)}
        ring = polynomial_ring(names)
        raw = {}
        for monomial, coeff in terms.items():
            exponents = [0] * len(names)
            for name, exponent in monomial:
                exponents[position[name]] += exponent
            key = tuple(exponents)
            raw[key] = raw.get(key, QQ.zero) + to_ground(coeff)
        return cls(names, ring.from_dict(raw, QQ))

    @staticmethod
    def coerce(value: "MPoly | Scalar") -> "MPoly":
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int | Fraction):
            return MPoly.const(value)
        raise TypeError(f"cannot interpret {value!r} as a polynomial")

    # structure

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def variables(self) -> tuple[str, ...]:
        used = set()
        for monomial in self._poly.itermonoms():
            used.update(name for name, exponent in zip(self._names, monomial) if exponent)
        return canonical_names(used)

    def is_constant(self) -> bool:
        return not self.variables()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        for coeff in self._poly.itercoeffs():
            return to_fraction(coeff)
        return Fraction(0)

    def terms(self) -> dict[tuple[tuple[str, int], ...], Fraction]:
        return {
            tuple((name, exponent) for name, exponent in zip(self._names, monomial) if exponent): to_fraction(coeff)
            for monomial, coeff in self._poly.iterterms()
        }

    def __len__(self) -> int:
        return len(self._poly)

    def in_ring(self, names: tuple[str, ...]):
        """Underlying sympy element moved into the ring over ``names``."""
        if names == self._names:
            return self._poly
        return self._poly.set_ring(polynomial_ring(names))

    def shrink(self) -> "MPoly":
        used = self.variables()
        if used == self._names:
            return self
        return MPoly(used, self.in_ring(used))

    def _unify(self, other: "MPoly"):
        if self._names == other._names:
            return self._names, self._poly, other._poly
        names = canonical_names(self._names + other._names)
        return names, self.in_ring(names), other.in_ring(names)

    # arithmetic

    def __add__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        names, left, right = self._unify(other)
        return MPoly(names, left + right)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        names, left, right = self._unify(other)
        return MPoly(names, left - right)

    def __rsub__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int | Fraction):
            return MPoly(self._names, self._poly.mul_ground(to_ground(other)))
        if not isinstance(other, MPoly):
            return NotImplemented
        names, left, right = self._unify(other)
        return MPoly(names, left * right)

    __rmul__ = __mul__

    def __neg__(self) -> "MPoly":
        return MPoly(self._names, -self._poly)

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return MPoly(self._names, self._poly**exponent)

    def __truediv__(self, other):
        if isinstance(other, int | Fraction):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, MPoly):
            return div_exact(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int | Fraction):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        _, left, right = self._unify(other)
        return left == right

    def __hash__(self) -> int:
        return hash(frozenset(self.terms().items()))

    # queries in one variable

    def degree(self, name: str) -> int:
        """Degree in ``name``; the zero polynomial has degree -1."""
        if self.is_zero():
            return -1
        if name not in self._names:
            return 0
        index = self._names.index(name)
        return max(monomial[index] for monomial in self._poly.itermonoms())

    def low_degree(self, name: str) -> int:
        if self.is_zero():
            return -1
        if name not in self._names:
            return 0
        index = self._names.index(name)
        return min(monomial[index] for monomial in self._poly.itermonoms())

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(monomial) for monomial in self._poly.itermonoms())

    def coeff(self, name: str, power: int) -> "MPoly":
        if name not in self._names:
            return self if power == 0 else MPoly.zero()
        index = self._names.index(name)
        return MPoly(self._names, self._poly.coeff_wrt(index, power))

    def coefficients(self, name: str) -> list["MPoly"]:
        """Coefficients in ``name`` indexed by power."""
        if self.is_zero():
            return []
        if name not in self._names:
            return [self]
        index = self._names.index(name)
        buckets: list[dict] = [{} for _ in range(self.degree(name) + 1)]
        for monomial, coeff in self._poly.iterterms():
            power = monomial[index]
            buckets[power][monomial[:index] + (0,) + monomial[index + 1 :]] = coeff
        ring = polynomial_ring(self._names)
        return [MPoly(self._names, ring.from_dict(bucket, QQ)) for bucket in buckets]

    def leading_coefficient(self, name: str) -> "MPoly":
        return self.coeff(name, self.degree(name))

    def diff(self, name: str) -> "MPoly":
        if name not in self._names:
            return MPoly.zero()
        return MPoly(self._names, self._poly.diff(self._names.index(name)))

    def is_homogeneous(self, names: Iterable[str]) -> bool:
        indices = [self._names.index(name) for name in names if name in self._names]
        degrees = {sum(monomial[i] for i in indices) for monomial in self._poly.itermonoms()}
        return len(degrees) <= 1

    # substitution

    def compose(self, mapping: Mapping[str, "MPoly | Scalar"]) -> "MPoly":
        """Substitute indeterminates by polynomials, all at once."""
        targets = {name: MPoly.coerce(value) for name, value in mapping.items() if name in self._names}
        if not targets:
            return self
        kept = [name for name in self._names if name not in targets]
        names = canonical_names(kept + [name for value in targets.values() for name in value.names])
        ring = polynomial_ring(names)
        position = {name: index for index, name in enumerate(names)}
        target_order = [name for name in self._names if name in targets]
        target_index = [self._names.index(name) for name in target_order]
        kept_index = [(self._names.index(name), position[name]) for name in kept]
        images = {name: targets[name].in_ring(names) for name in target_order}
        powers: dict[str, list] = {name: [ring.one, images[name]] for name in target_order}

        def power(name: str, exponent: int):
            cache = powers[name]
            while len(cache) <= exponent:
                cache.append(cache[-1] * images[name])
            return cache[exponent]

        groups: dict[tuple[int, ...], dict] = {}
        for monomial, coeff in self._poly.iterterms():
            key = tuple(monomial[i] for i in target_index)
            exponents = [0] * len(names)
            for source, target in kept_index:
                exponents[target] = monomial[source]
            groups.setdefault(key, {})[tuple(exponents)] = coeff

        accumulator: dict = {}
        for key, bucket in groups.items():
            product = ring.from_dict(bucket, QQ)
            for name, exponent in zip(target_order, key):
                if exponent:
                    product = product * power(name, exponent)
            for monomial, coeff in product.iterterms():
                previous = accumulator.get(monomial)
                accumulator[monomial] = coeff if previous is None else previous + coeff
        return MPoly(names, ring.from_dict(accumulator, QQ))

    def evaluate(self, values: Mapping[str, Scalar]) -> "MPoly":
        return self.compose({name: MPoly.const(value) for name, value in values.items()})

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        return self.compose({old: MPoly.var(new) for old, new in mapping.items()})

    # normal forms

    def content(self) -> Fraction:
        """Positive rational content: the poly divided by it has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        numerators = 0
        denominators = 1
        for coeff in self._poly.itercoeffs():
            value = to_fraction(coeff)
            numerators = integer_gcd(numerators, value.numerator)
            denominators = denominators * value.denominator // integer_gcd(denominators, value.denominator)
        return Fraction(numerators, denominators)

    def leading_term_coefficient(self) -> Fraction:
        """Coefficient of the graded-lexicographically largest monomial in registry order."""
        if self.is_zero():
            return Fraction(0)
        return to_fraction(self._poly.LC)

    def normalized(self) -> "MPoly":
        """Primitive integer form with positive leading coefficient."""
        if self.is_zero():
            return self
        unit = self.content()
        if self.leading_term_coefficient() < 0:
            unit = -unit
        return self * (1 / unit)

    # text

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        ordered = sorted(
            self.terms().items(),
            key=lambda item: (-sum(e for _, e in item[0]), _monomial_rank(item[0])),
        )
        pieces = []
        for monomial, coeff in ordered:
            factors = [name if exponent == 1 else f"{name}^{exponent}" for name, exponent in monomial]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def from_text(cls, text: str) -> "MPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[tuple[tuple[str, int], ...], Fraction] = {}
        for raw in text.replace(" - ", " + -").split(" + "):
            raw = raw.strip()
            sign = -1 if raw.startswith("-") else 1
            raw = raw.lstrip("-")
            coeff = Fraction(sign)
            monomial = []
            for factor in raw.split("*"):
                if _NUMBER.fullmatch(factor):
                    coeff *= Fraction(factor)
                else:
                    name, _, exponent = factor.partition("^")
                    monomial.append((name, int(exponent) if exponent else 1))
            key = tuple(monomial)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls.from_terms(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"


_NUMBER = re.compile(r"\d+(/\d+)?")


def _monomial_rank(monomial: tuple[tuple[str, int], ...]) -> tuple:
    # larger exponents in earlier registry variables first
    return tuple((variable_sort_key(name), -exponent) for name, exponent in monomial)


def symbols(*names: str) -> tuple[MPoly, ...]:
    return tuple(MPoly.var(name) for name in names)


def div_exact(p: MPoly, q: MPoly) -> MPoly:
    """Return r with p = q*r, raising NotDivisible when the remainder is nonzero."""
    if q.is_zero():
        raise ZeroInput("division by the zero polynomial")
    if p.is_zero():
        return MPoly.zero()
    if q.is_constant():
        return p * (1 / q.constant_value())
    names, left, right = p._unify(q)
    quotient, remainder = left.div(right)
    if remainder:
        raise NotDivisible(f"{q} does not divide the given polynomial ({len(remainder)} remainder terms)")
    return MPoly(names, quotient)


def divides(q: MPoly, p: MPoly) -> bool:
    try:
        div_exact(p, q)
    except NotDivisible:
        return False
    return True


def gcd(p: MPoly, q: MPoly) -> MPoly:
    """Primitive gcd with positive leading coefficient; gcd(0, q) is q normalized."""
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    names = canonical_names(p.variables() + q.variables())
    if not names:
        return MPoly.one()
    ring = polynomial_ring(names)
    common, _, _ = ring.dmp_inner_gcd(p.in_ring(names), q.in_ring(names))
    return MPoly(names, common).normalized()


def _integral(p: MPoly, names: tuple[str, ...]):
    """Clear denominators; returns (multiplier, element of the integer ring over names)."""
    multiplier, cleared = p.in_ring(names).clear_denoms()
    return to_fraction(QQ.convert(multiplier)), cleared.set_ring(polynomial_ring(names, ZZ))


def _wrap_integer_result(result, names: tuple[str, ...]) -> MPoly:
    if names:
        return MPoly(names, result.set_ring(polynomial_ring(names)))
    return MPoly.const(int(result))


def resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Sylvester resultant in ``var``; Res(p, q) = (-1)^(deg p * deg q) Res(q, p)."""
    if p.is_zero() or q.is_zero():
        raise ZeroInput("resultant of the zero polynomial")
    deg_p, deg_q = p.degree(var), q.degree(var)
    if deg_p == 0:
        return p**deg_q
    if deg_q == 0:
        return q**deg_p
    others = [name for name in canonical_names(p.variables() + q.variables()) if name != var]
    names = (var, *others)
    scale_p, int_p = _integral(p, names)
    scale_q, int_q = _integral(q, names)
    logger.debug(f"resultant in {var}: degrees {deg_p}, {deg_q}, {len(p)} and {len(q)} terms")
    raw = int_p.resultant(int_q)
    value = _wrap_integer_result(raw, tuple(others))
    return value * (1 / (scale_p**deg_q * scale_q**deg_p))


def discriminant(p: MPoly, var: str) -> MPoly:
    """(-1)^(n(n-1)/2) Res(p, dp/dvar) / lc(p) with n the degree in ``var``."""
    degree = p.degree(var)
    if degree < 2:
        raise DegreeTooLow(f"discriminant needs degree at least 2 in {var}, got {degree}")
    others = [name for name in p.variables() if name != var]
    names = (var, *others)
    scale, integral = _integral(p, names)
    logger.debug(f"discriminant in {var}: degree {degree}, {len(p)} terms")
    raw = integral.discriminant()
    value = _wrap_integer_result(raw, tuple(others))
    return value * (1 / scale ** (2 * degree - 2))


def univariate_factors(p: MPoly, var: str) -> tuple[Fraction, list[tuple[MPoly, int]]]:
    """Factorization over the rationals of a polynomial in the single indeterminate ``var``."""
    if set(p.variables()) - {var}:
        raise ValueError(f"{p} is not univariate in {var}")
    if p.is_zero():
        raise ZeroInput("factorization of the zero polynomial")
    names = (var,)
    coeff, factors = p.in_ring(names).factor_list()
    return to_fraction(QQ.convert(coeff)), [(MPoly(names, factor).normalized(), mult) for factor, mult in factors]
