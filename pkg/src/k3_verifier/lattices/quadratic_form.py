# Standard Library
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

# Third Party
from sympy import factorint

# First Party
from k3_verifier.errors import Degenerate, NotIsotropic, TooLarge
from k3_verifier.exactalg.intmatrix import smith_normal_form
from k3_verifier.lattices.lattice import Lattice

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 256
TABLE_LIMIT = 64

Element = tuple[int, ...]
Subgroup = frozenset[Element]


def mod2(value: Fraction) -> Fraction:
    return value - 2 * (value.numerator // (2 * value.denominator))


def mod1(value: Fraction) -> Fraction:
    return value - value.numerator // value.denominator


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Finite abelian group Z/d1 + ... + Z/dk with a Q/2Z-valued quadratic form.

    ``q_values`` holds q on the generators (mod 2), ``b_values`` the bilinear form
    on pairs of generators (mod 1). ``representatives`` optionally keeps dual-lattice
    vectors (basis coordinates) lifting the generators.
    """

    orders: tuple[int, ...]
    q_values: tuple[Fraction, ...]
    b_values: tuple[tuple[Fraction, ...], ...]
    representatives: tuple[tuple[Fraction, ...], ...] = ()

    @property
    def order(self) -> int:
        result = 1
        for order in self.orders:
            result *= order
        return result

    def is_trivial(self) -> bool:
        return self.order == 1

    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def elements(self) -> Iterator[Element]:
        return itertools.product(*(range(order) for order in self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % order for a, b, order in zip(x, y, self.orders))

    def scale(self, n: int, x: Element) -> Element:
        return tuple((n * a) % order for a, order in zip(x, self.orders))

    def element_order(self, x: Element) -> int:
        n = 1
        while self.scale(n, x) != self.zero():
            n += 1
        return n

    def q(self, x: Element) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(x):
            if not a:
                continue
            total += a * a * self.q_values[i]
            for j in range(i + 1, len(x)):
                if x[j]:
                    total += 2 * a * x[j] * self.b_values[i][j]
        return mod2(total)

    def b(self, x: Element, y: Element) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(x):
            if a:
                for j, c in enumerate(y):
                    if c:
                        total += a * c * self.b_values[i][j]
        return mod1(total)

    def table(self) -> dict[Element, Fraction]:
        if self.order > TABLE_LIMIT:
            raise TooLarge(f"value table of a group of order {self.order}")
        return {x: self.q(x) for x in self.elements()}

    def orthogonal_sum(self, other: "FiniteQuadraticForm") -> "FiniteQuadraticForm":
        size = len(self.orders)
        width = size + len(other.orders)
        b_values = []
        for i in range(width):
            row = []
            for j in range(width):
                if i < size and j < size:
                    row.append(self.b_values[i][j])
                elif i >= size and j >= size:
                    row.append(other.b_values[i - size][j - size])
                else:
                    row.append(Fraction(0))
            b_values.append(tuple(row))
        return FiniteQuadraticForm(self.orders + other.orders, self.q_values + other.q_values, tuple(b_values))

    def describe(self) -> str:
        values = ", ".join(str(value) for value in self.q_values)
        return f"{group_label(list(self.orders))} with q-values ({values})"


def _quadratic(vector: list[Fraction], gram) -> Fraction:
    return sum(vector[i] * gram[i, j] * vector[j] for i in range(len(vector)) for j in range(len(vector)))


def _bilinear(left: list[Fraction], right: list[Fraction], gram) -> Fraction:
    return sum(left[i] * gram[i, j] * right[j] for i in range(len(left)) for j in range(len(right)))


def discriminant_form(lattice: Lattice) -> FiniteQuadraticForm:
    """L*/L with q(x) = x.G.x mod 2, generators taken from the Smith decomposition U*G*V = S."""
    gram = lattice.gram
    if lattice.rank and gram.det() == 0:
        raise Degenerate(f"lattice {lattice.name()} is degenerate")
    left, diagonal, right = smith_normal_form(gram)
    orders = []
    representatives = []
    for i, order in enumerate(diagonal.diagonal_entries()):
        if order > 1:
            orders.append(order)
            representatives.append([Fraction(entry, order) for entry in right.column(i)])
    q_values = tuple(mod2(_quadratic(vector, gram)) for vector in representatives)
    b_values = tuple(
        tuple(mod1(_bilinear(first, second, gram)) for second in representatives) for first in representatives
    )
    form = FiniteQuadraticForm(
        tuple(orders), q_values, b_values, tuple(tuple(vector) for vector in representatives)
    )
    logger.debug(f"discriminant form of {lattice.name()}: {form.describe()}")
    return form


def discriminant_class(lattice: Lattice, dual_vector_image: list[int]) -> Element:
    """Class in the generator coordinates of discriminant_form of the dual vector G^-1 y, given y."""
    left, diagonal, _ = smith_normal_form(lattice.gram)
    coordinates = []
    for i, order in enumerate(diagonal.diagonal_entries()):
        if order > 1:
            value = sum(left[i, j] * dual_vector_image[j] for j in range(lattice.rank))
            coordinates.append(value % order)
    return tuple(coordinates)


def _check_size(form: FiniteQuadraticForm, limit: int = BRUTE_FORCE_LIMIT) -> None:
    if form.order > limit:
        raise TooLarge(f"group of order {form.order} exceeds the brute-force bound {limit}")


def _invariants_from_orders(form: FiniteQuadraticForm) -> list[int]:
    return abelian_invariants(list(form.elements()), form.element_order)


def abelian_invariants(elements: list, element_order) -> list[int]:
    """Invariant factors d1 | d2 | ... of a finite abelian group from its element orders."""
    size = len(elements)
    if size == 1:
        return []
    orders = [element_order(x) for x in elements]
    exponents_by_prime: dict[int, list[int]] = {}
    for prime, multiplicity in factorint(size).items():
        counts = [sum(1 for order in orders if (prime**k) % order == 0) for k in range(multiplicity + 1)]
        layers = []
        for k in range(1, multiplicity + 1):
            ratio = counts[k] // counts[k - 1]
            layers.append(factorint(ratio).get(prime, 0) if ratio > 1 else 0)
        parts = [sum(1 for layer in layers if layer >= i) for i in range(1, max(layers) + 1)] if layers else []
        exponents_by_prime[prime] = sorted(parts, reverse=True)
    length = max(len(parts) for parts in exponents_by_prime.values())
    invariants = []
    for index in range(length):
        factor = 1
        for prime, parts in exponents_by_prime.items():
            if index < len(parts):
                factor *= prime ** parts[index]
        invariants.append(factor)
    return sorted(invariants)


def find_isomorphism(first: FiniteQuadraticForm, second: FiniteQuadraticForm) -> tuple[Element, ...] | None:
    """Images of the generators of ``first`` in ``second`` defining an isometry, or None."""
    if first.order != second.order:
        return None
    _check_size(first)
    _check_size(second)
    if _invariants_from_orders(first) != _invariants_from_orders(second):
        return None
    candidates = list(second.elements())
    chosen: list[Element] = []

    def extend(index: int) -> bool:
        if index == len(first.orders):
            return True
        order = first.orders[index]
        for image in candidates:
            if second.scale(order, image) != second.zero():
                continue
            if second.q(image) != first.q_values[index]:
                continue
            if any(second.b(image, chosen[j]) != first.b_values[index][j] for j in range(index)):
                continue
            chosen.append(image)
            if extend(index + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        return None
    images = set()
    for x in first.elements():
        image = second.zero()
        for coefficient, generator in zip(x, chosen):
            image = second.add(image, second.scale(coefficient, generator))
        images.add(image)
    if len(images) != second.order:
        return None
    return tuple(chosen)


def fqf_isomorphic(first: FiniteQuadraticForm, second: FiniteQuadraticForm) -> bool:
    if first is second:
        return True
    return find_isomorphism(first, second) is not None


def span(form: FiniteQuadraticForm, generators: list[Element]) -> Subgroup:
    elements = {form.zero()}
    for generator in generators:
        frontier = set(elements)
        current = generator
        while current not in elements:
            frontier |= {form.add(x, current) for x in elements}
            current = form.add(current, generator)
        elements = frontier
    return frozenset(elements)


def is_isotropic(form: FiniteQuadraticForm, subgroup: Subgroup) -> bool:
    return all(form.q(x) == 0 for x in subgroup)


def isotropic_subgroups(form: FiniteQuadraticForm) -> list[Subgroup]:
    """Every subgroup on which q vanishes mod 2, the trivial one included."""
    _check_size(form)
    isotropic = [x for x in form.elements() if x != form.zero() and form.q(x) == 0]
    found = {frozenset({form.zero()})}
    frontier = list(found)
    while frontier:
        grown = []
        for subgroup in frontier:
            for x in isotropic:
                if x in subgroup or any(form.b(x, y) != 0 for y in subgroup):
                    continue
                bigger = span(form, list(subgroup) + [x])
                if bigger not in found:
                    found.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return sorted(found, key=lambda subgroup: (len(subgroup), sorted(subgroup)))


def overlattice_form(form: FiniteQuadraticForm, subgroup: Subgroup) -> FiniteQuadraticForm:
    """The form induced on W^perp / W."""
    if not is_isotropic(form, subgroup):
        raise NotIsotropic("the gluing subgroup is not isotropic")
    if len(subgroup) == 1:
        return form
    orthogonal = [x for x in form.elements() if all(form.b(x, w) == 0 for w in subgroup)]

    def canonical(x: Element) -> Element:
        return min(form.add(x, w) for w in subgroup)

    cosets = sorted({canonical(x) for x in orthogonal})

    def coset_order(x: Element) -> int:
        n, current = 1, x
        while canonical(current) != form.zero():
            current = form.add(current, x)
            n += 1
        return n

    invariants = abelian_invariants(cosets, coset_order)
    generators = _cyclic_decomposition(form, cosets, invariants, canonical)
    return FiniteQuadraticForm(
        tuple(invariants),
        tuple(form.q(g) for g in generators),
        tuple(tuple(form.b(g, h) for h in generators) for g in generators),
    )


def _cyclic_decomposition(form, cosets, invariants, canonical) -> list[Element]:
    """Coset representatives g_i of order d_i whose cyclic groups form a direct sum."""
    by_order: dict[int, list[Element]] = {}
    for x in cosets:
        n, current = 1, x
        while canonical(current) != form.zero():
            current = form.add(current, x)
            n += 1
        by_order.setdefault(n, []).append(x)
    target = len(cosets)
    chosen: list[Element] = []

    def cyclic(x: Element, order: int) -> set[Element]:
        return {canonical(form.scale(k, x)) for k in range(order)}

    def extend(index: int, spanned: set[Element]) -> bool:
        if index < 0:
            return len(spanned) == target
        order = invariants[index]
        for x in by_order.get(order, []):
            multiples = cyclic(x, order)
            if len(spanned & multiples) != 1:
                continue
            grown = {canonical(form.add(s, m)) for s in spanned for m in multiples}
            chosen.append(x)
            if extend(index - 1, grown):
                return True
            chosen.pop()
        return False

    if not extend(len(invariants) - 1, {form.zero()}):
        raise ArithmeticError("no cyclic decomposition of the quotient group")
    return list(reversed(chosen))


def group_label(invariants: list[int], style: str = "disc") -> str:
    """ℤ2², ℤ4, 0 for discriminant groups; {𝕀}, ℤ/2ℤ for Mordell-Weil groups."""
    factors = [d for d in invariants if d > 1]
    if not factors:
        return "0" if style == "disc" else "{𝕀}"
    if style == "mw":
        return " ⊕ ".join(f"ℤ/{d}ℤ" for d in factors)
    pieces = []
    for order, group in itertools.groupby(factors):
        count = len(list(group))
        pieces.append(f"ℤ{order}" + (_superscript(count) if count > 1 else ""))
    return " ⊕ ".join(pieces)


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _superscript(n: int) -> str:
    return str(n).translate(_SUPERSCRIPTS)


def target_form() -> FiniteQuadraticForm:
    """(Z2 + Z2, (1/2) + (1/2)), the discriminant form of H + E7(-1) + E7(-1)."""
    half = Fraction(1, 2)
    return FiniteQuadraticForm((2, 2), (half, half), ((half, Fraction(0)), (Fraction(0), half)))
