# Standard Library
import itertools
import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

# Third Party
from sympy import factorint

# First Party
from k3_verifier.errors import Inconsistent, NegativeRank, TooLarge
from k3_verifier.exactalg.intmatrix import smith_normal_form
from k3_verifier.lattices.lattice import Lattice, ade_lattice, parse_lattice_spec
from k3_verifier.lattices.quadratic_form import (
    Element,
    FiniteQuadraticForm,
    Subgroup,
    discriminant_class,
    discriminant_form,
    fqf_isomorphic,
    group_label,
    overlattice_form,
    span,
    target_form,
)

logger = logging.getLogger(__name__)

FRAME_RANK = 14
GLUE_SEARCH_LIMIT = 4096
# Mordell-Weil torsion of an elliptic surface embeds in (Q/Z)^2
MW_TORSION_GENERATORS = 2
_KIND_ORDER = {"E": 0, "D": 1, "A": 2}

# (root summands, Mordell-Weil torsion invariants) of the four Jacobian fibrations
EXPECTED_FRAMES = {
    ("E7", "E7"): (),
    ("E8", "D6"): (),
    ("D14",): (),
    ("D12", "A1", "A1"): (2,),
}


@dataclass(frozen=True)
class FrameResult:
    summands: tuple[str, ...]
    torsion: tuple[int, ...]
    case: str
    expected: bool = True

    @property
    def root_label(self) -> str:
        return "+".join(self.summands)

    @property
    def torsion_label(self) -> str:
        return group_label(list(self.torsion), style="mw")

    @property
    def root_rank(self) -> int:
        return sum(int(summand[1:]) for summand in self.summands)


@dataclass(frozen=True)
class PrunedCandidate:
    summands: tuple[str, ...]
    exceeded: tuple[tuple[int, int], ...]

    @property
    def root_label(self) -> str:
        return "+".join(self.summands)


@dataclass(frozen=True)
class LatticeIsomorphismClass:
    rank: int
    labels: tuple[str, ...]
    disc_group: str
    verified: bool = field(default=False, compare=False)


def summand_sort_key(summand: str) -> tuple[int, int]:
    return -int(summand[1:]), _KIND_ORDER[summand[0]]


def canonical_summands(summands) -> tuple[str, ...]:
    return tuple(sorted(summands, key=summand_sort_key))


def summand_determinant(summand: str) -> int:
    kind, n = summand[0], int(summand[1:])
    if kind == "A":
        return n + 1
    if kind == "D":
        return 4
    return {6: 3, 7: 2, 8: 1}[n]


def _summand_types(rank: int) -> list[str]:
    types = [f"A{n}" for n in range(1, rank + 1)]
    types += [f"D{n}" for n in range(4, rank + 1)]
    types += [f"E{n}" for n in (6, 7, 8) if n <= rank]
    return sorted(types, key=summand_sort_key)


def ade_multisets(rank: int = FRAME_RANK) -> list[tuple[str, ...]]:
    """Every multiset of ADE summands of the given total rank, in canonical order."""
    types = _summand_types(rank)
    results: list[tuple[str, ...]] = []

    def extend(start: int, remaining: int, chosen: list[str]) -> None:
        if remaining == 0:
            results.append(tuple(chosen))
            return
        for index in range(start, len(types)):
            summand = types[index]
            size = int(summand[1:])
            if size <= remaining:
                chosen.append(summand)
                extend(index, remaining - size, chosen)
                chosen.pop()

    extend(0, rank, [])
    return results


@lru_cache(maxsize=128)
def summand_form(summand: str) -> FiniteQuadraticForm:
    return discriminant_form(ade_lattice(summand[0], int(summand[1:])))


@lru_cache(maxsize=128)
def class_min_norms(summand: str) -> dict[Element, Fraction]:
    """Minimal |norm| of each discriminant class, attained on the fundamental weights."""
    lattice = ade_lattice(summand[0], int(summand[1:]))
    form = summand_form(summand)
    left, diagonal, right = smith_normal_form(lattice.gram)
    orders = diagonal.diagonal_entries()
    minima: dict[Element, Fraction] = {form.zero(): Fraction(0)}
    for i in range(lattice.rank):
        unit = [int(i == j) for j in range(lattice.rank)]
        norm = abs(sum(Fraction(right[i, j] * left[j, i], orders[j]) for j in range(lattice.rank)))
        cls = discriminant_class(lattice, unit)
        if cls not in minima or norm < minima[cls]:
            minima[cls] = norm
    if len(minima) != form.order:
        raise ArithmeticError(f"fundamental weights of {summand} miss a discriminant class")
    return minima


class _GlueContext:
    """Orthogonal sum of the summand discriminant forms with per-element coset minima."""

    def __init__(self, summands: tuple[str, ...]):
        self.summands = summands
        self.forms = [summand_form(summand) for summand in summands]
        self.form = FiniteQuadraticForm((), (), ())
        self.slices = []
        for summand_quadratic in self.forms:
            start = len(self.form.orders)
            self.form = self.form.orthogonal_sum(summand_quadratic)
            self.slices.append((start, len(self.form.orders)))

    def min_norm(self, element: Element) -> Fraction:
        total = Fraction(0)
        for summand, (start, stop) in zip(self.summands, self.slices):
            total += class_min_norms(summand)[element[start:stop]]
        return total

    def root_free(self, subgroup: Subgroup) -> bool:
        return all(self.min_norm(x) >= 4 for x in subgroup if x != self.form.zero())


def prime_lengths(form: FiniteQuadraticForm) -> dict[int, int]:
    """Number of cyclic factors of the group whose order each prime divides."""
    lengths: dict[int, int] = {}
    for order in form.orders:
        for prime in factorint(order):
            lengths[prime] = lengths.get(prime, 0) + 1
    return lengths


def glue_length_bound(target: FiniteQuadraticForm, prime: int) -> int:
    """Largest p-length of a group D with W^perp / W = ``target`` for W on MW_TORSION_GENERATORS generators.

    D / W^perp is dual to W, so the length of D is at most 2 * length(W) + length(target).
    """
    return 2 * MW_TORSION_GENERATORS + prime_lengths(target).get(prime, 0)


def exceeded_lengths(form: FiniteQuadraticForm, target: FiniteQuadraticForm) -> dict[int, int]:
    return {
        prime: length for prime, length in prime_lengths(form).items() if length > glue_length_bound(target, prime)
    }


def _glue_subgroups(context: _GlueContext, size: int) -> list[Subgroup]:
    """Isotropic root-free subgroups of the given order generated by at most MW_TORSION_GENERATORS elements."""
    form = context.form
    if form.order > GLUE_SEARCH_LIMIT:
        raise TooLarge(f"glue search over a group of order {form.order}")
    zero = form.zero()
    candidates = [
        x
        for x in form.elements()
        if x != zero and form.q(x) == 0 and size % form.element_order(x) == 0 and context.min_norm(x) >= 4
    ]
    found: set[Subgroup] = set()
    for x in candidates:
        if form.element_order(x) == size:
            subgroup = span(form, [x])
            if context.root_free(subgroup):
                found.add(subgroup)
    for x, y in itertools.combinations(candidates, 2):
        if form.b(x, y) != 0:
            continue
        subgroup = span(form, [x, y])
        if len(subgroup) == size and context.root_free(subgroup):
            found.add(subgroup)
    return sorted(found, key=sorted)


def _admissible_torsion(
    summands: tuple[str, ...], target: FiniteQuadraticForm
) -> list[tuple[int, ...]]:
    """Torsion groups W with (K_root, W) gluing to an overlattice whose form is ``target``."""
    context = _GlueContext(summands)
    order = context.form.order
    if order == target.order:
        return [()] if fqf_isomorphic(context.form, target) else []
    ratio, remainder = divmod(order, target.order)
    size = round(ratio**0.5)
    if remainder or size * size != ratio:
        return []
    exceeded = exceeded_lengths(context.form, target)
    if exceeded:
        logger.debug(f"{'+'.join(summands)} skipped: lengths {exceeded} leave no glue on two generators")
        return []
    groups = set()
    for subgroup in _glue_subgroups(context, size):
        if fqf_isomorphic(overlattice_form(context.form, subgroup), target):
            groups.add(_subgroup_invariants(context.form, subgroup))
    return sorted(groups)


def _subgroup_invariants(form: FiniteQuadraticForm, subgroup: Subgroup) -> tuple[int, ...]:
    orders = sorted(form.element_order(x) for x in subgroup)
    largest = orders[-1]
    if largest == len(subgroup):
        return (largest,)
    return (len(subgroup) // largest, largest)


def _case_two_candidates(target: FiniteQuadraticForm) -> Iterator[tuple[str, ...]]:
    """Multisets without A_n (n >= 2) whose determinant is 4 |W|^2 for a nontrivial W."""
    for summands in ade_multisets(FRAME_RANK):
        det = math.prod(summand_determinant(summand) for summand in summands)
        if det == target.order:
            continue
        if any(summand[0] == "A" and summand != "A1" for summand in summands):
            continue
        if det % 4 or det < 16:
            continue
        size = math.isqrt(det // 4)
        if size * size * 4 == det:
            yield summands


@lru_cache(maxsize=None)
def pruned_frame_candidates() -> tuple[PrunedCandidate, ...]:
    """Case II multisets left out of the glue search, with the lengths over the bound."""
    target = target_form()
    pruned = []
    for summands in _case_two_candidates(target):
        exceeded = exceeded_lengths(_GlueContext(summands).form, target)
        if exceeded:
            pruned.append(PrunedCandidate(canonical_summands(summands), tuple(sorted(exceeded.items()))))
    return tuple(pruned)


def classify_frame_lattices() -> list[FrameResult]:
    """Root lattices of rank 14 with torsion W such that the frame has form (Z2 + Z2, 1/2 + 1/2)."""
    target = target_form()
    results = []
    for summands in ade_multisets(FRAME_RANK):
        if math.prod(summand_determinant(summand) for summand in summands) == target.order:
            if fqf_isomorphic(_GlueContext(summands).form, target):
                results.append(_frame(summands, (), "I"))
    for summands in _case_two_candidates(target):
        for torsion in _admissible_torsion(summands, target):
            results.append(_frame(summands, torsion, "II"))
    pruned = pruned_frame_candidates()
    if pruned:
        logger.info(f"frame search skipped {len(pruned)} multisets whose discriminant lengths admit no glue")
    extras = [result for result in results if not result.expected]
    if extras:
        logger.warning(f"frame search admitted unexpected candidates: {[r.root_label for r in extras]}")
    logger.info(f"frame classification found {len(results)} frames")
    return sorted(results, key=lambda result: (not result.expected, result.case, result.summands))


def _frame(summands: tuple[str, ...], torsion: tuple[int, ...], case: str) -> FrameResult:
    canonical = canonical_summands(summands)
    return FrameResult(canonical, torsion, case, EXPECTED_FRAMES.get(canonical) == torsion)


def root_summands(root: Lattice) -> tuple[str, ...]:
    if not root.summands or any(summand[0] not in _KIND_ORDER or summand.endswith("+") for summand in root.summands):
        raise Inconsistent(f"{root.name()} is not a sum of ADE root lattices")
    return canonical_summands(root.summands)


def mw_torsion_from_frame(root: Lattice, target: FiniteQuadraticForm | None = None) -> str:
    """Mordell-Weil torsion forced by the frame root lattice, e.g. "{𝕀}" or "ℤ/2ℤ"."""
    target = target or target_form()
    torsion = _admissible_torsion(root_summands(root), target)
    if not torsion:
        raise Inconsistent(f"no admissible torsion for the frame root lattice {root.name()}")
    if len(torsion) > 1:
        labels = [group_label(list(group), style="mw") for group in torsion]
        raise Inconsistent(f"frame root lattice {root.name()} admits several torsion groups {labels}")
    return group_label(list(torsion[0]), style="mw")


def shioda_tate_rank(root_ranks: list[int], picard_rank: int) -> int:
    """Mordell-Weil rank = picard rank - 2 - sum of fiber root ranks."""
    if not 1 <= picard_rank <= 20:
        raise ValueError(f"picard rank must lie in 1..20, got {picard_rank}")
    if any(rank < 0 for rank in root_ranks):
        raise ValueError(f"fiber root ranks must be nonnegative: {root_ranks}")
    rank = picard_rank - 2 - sum(root_ranks)
    if rank < 0:
        raise NegativeRank(f"fiber ranks {root_ranks} do not fit in picard rank {picard_rank}")
    return rank


ISOMORPHISM_TABLE = (
    (16, ("H+E7+E7", "H+D14", "H+E8+D6"), "ℤ2²"),
    (17, ("H+E8+E7",), "ℤ2"),
    (17, ("H+E8+D7", "H+D15"), "ℤ4"),
    (17, ("H+E7+E7+A1", "H+E8+D6+A1", "H+D14+A1"), "ℤ2³"),
    (18, ("H+E8+E8", "H+D16^+"), "0"),
)


def lattice_label_isomorphisms() -> list[LatticeIsomorphismClass]:
    """The rank 16 to 18 isomorphism classes used for lattice labels, checked by discriminant forms."""
    classes = []
    for rank, labels, disc_group in ISOMORPHISM_TABLE:
        lattices = [parse_lattice_spec(label) for label in labels]
        forms = [discriminant_form(lattice) for lattice in lattices]
        verified = all(lattice.rank == rank for lattice in lattices)
        verified = verified and all(group_label(list(form.orders)) == disc_group for form in forms)
        verified = verified and all(fqf_isomorphic(forms[0], other) for other in forms[1:])
        if not verified:
            logger.error(f"lattice isomorphism class {labels} failed its discriminant-form check")
        classes.append(LatticeIsomorphismClass(rank, labels, disc_group, verified))
    return classes


def isomorphic_labels(spec: str) -> tuple[str, ...]:
    """Other labels of the isomorphism class containing ``spec``; empty when it is in no class."""
    for _, labels, _ in ISOMORPHISM_TABLE:
        if spec in labels:
            return tuple(label for label in labels if label != spec)
    return ()


@lru_cache(maxsize=None)
def _class_target(label: str) -> FiniteQuadraticForm:
    return discriminant_form(parse_lattice_spec(label))


def polarization_class(summands, torsion: tuple[int, ...]) -> LatticeIsomorphismClass | None:
    """Isomorphism class of H + (root lattice glued along a torsion group W), if tabulated."""
    canonical = canonical_summands(summands)
    rank = 2 + sum(int(summand[1:]) for summand in canonical)
    for rank_entry, labels, disc_group in ISOMORPHISM_TABLE:
        if rank_entry != rank:
            continue
        if tuple(torsion) in _admissible_torsion(canonical, _class_target(labels[0])):
            return LatticeIsomorphismClass(rank, labels, disc_group)
    logger.warning(f"no tabulated polarization lattice for {'+'.join(canonical)} with torsion {torsion}")
    return None
