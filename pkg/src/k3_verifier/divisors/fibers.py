# Standard Library
import logging
import re
import unicodedata
from dataclasses import dataclass, field

# First Party
from k3_verifier.divisors.curves import (
    CurveGraph,
    DivisorClass,
    curve_graph,
    intersection_vector,
    pairing,
    polarizing_divisor,
)
from k3_verifier.errors import UnknownType

logger = logging.getLogger(__name__)

_HAT = "\u0302"


@dataclass(frozen=True)
class ExtendedDiagram:
    """Affine Dynkin diagram: node marks and weighted edges between node indices."""

    label: str
    marks: tuple[int, ...]
    edges: dict[tuple[int, int], int] = field(hash=False)

    def weight(self, first: int, second: int) -> int:
        return self.edges.get((min(first, second), max(first, second)), 0)

    def neighbours(self, node: int) -> list[int]:
        return [other for other in range(len(self.marks)) if other != node and self.weight(node, other)]


def parse_type_label(label: str) -> tuple[str, int]:
    """("E", 7) from "Ê7", "E7" or "E^7"; raises UnknownType for anything else."""
    plain = unicodedata.normalize("NFD", label).replace(_HAT, "").replace("^", "").strip()
    match = re.fullmatch(r"([ADE])(\d+)", plain)
    if not match:
        raise UnknownType(f"unknown extended Dynkin type {label!r}")
    kind, n = match.group(1), int(match.group(2))
    if (kind == "A" and n < 1) or (kind == "D" and n < 4) or (kind == "E" and n not in (6, 7, 8)):
        raise UnknownType(f"unknown extended Dynkin type {label!r}")
    return kind, n


def hat_label(kind: str, n: int) -> str:
    return unicodedata.normalize("NFC", f"{kind}{_HAT}{n}")


def _chain(nodes: list[int]) -> dict[tuple[int, int], int]:
    return {(min(a, b), max(a, b)): 1 for a, b in zip(nodes, nodes[1:])}


def extended_diagram(label: str) -> ExtendedDiagram:
    kind, n = parse_type_label(label)
    name = hat_label(kind, n)
    if kind == "A":
        if n == 1:
            return ExtendedDiagram(name, (1, 1), {(0, 1): 2})
        return ExtendedDiagram(name, (1,) * (n + 1), _chain(list(range(n + 1))) | {(0, n): 1})
    if kind == "D":
        marks = (1, 1) + (2,) * (n - 3) + (1, 1)
        edges = {(0, 2): 1, (1, 2): 1} | _chain(list(range(2, n - 1))) | {(n - 2, n - 1): 1, (n - 2, n): 1}
        return ExtendedDiagram(name, marks, edges)
    if n == 6:
        return ExtendedDiagram(name, (3, 2, 1, 2, 1, 2, 1), _chain([2, 1, 0, 3, 4]) | _chain([0, 5, 6]))
    if n == 7:
        return ExtendedDiagram(name, (1, 2, 3, 4, 3, 2, 1, 2), _chain(list(range(7))) | {(3, 7): 1})
    return ExtendedDiagram(name, (1, 2, 3, 4, 5, 6, 4, 2, 3), _chain(list(range(8))) | {(5, 8): 1})


def match_diagram(
    components: DivisorClass, diagram: ExtendedDiagram, graph: CurveGraph
) -> dict[int, str] | None:
    """Node-to-curve bijection respecting marks and intersection numbers, or None."""
    support = components.support()
    if len(support) != len(diagram.marks):
        return None
    order = [0]
    for node in order:
        order.extend(other for other in diagram.neighbours(node) if other not in order)
    if len(order) != len(diagram.marks):
        return None
    assignment: dict[int, str] = {}

    def extend(position: int) -> bool:
        if position == len(order):
            return True
        node = order[position]
        used = set(assignment.values())
        for curve in support:
            if curve in used or components.coefficient(curve) != diagram.marks[node]:
                continue
            if any(graph.intersection(curve, assignment[other]) != diagram.weight(node, other) for other in assignment):
                continue
            assignment[node] = curve
            if extend(position + 1):
                return True
            del assignment[node]
        return False

    return dict(assignment) if extend(0) else None


def fiber_class_failures(
    components: DivisorClass, type_label: str, section: str, graph: CurveGraph | None = None
) -> list[str]:
    graph = graph or curve_graph()
    diagram = extended_diagram(type_label)
    graph.index(section)
    for curve in components.support():
        graph.index(curve)
    failures = []
    square = pairing(components, components, graph)
    if square != 0:
        failures.append(f"self-intersection is {square}, not 0")
    if match_diagram(components, diagram, graph) is None:
        failures.append(f"support and multiplicities do not form {diagram.label}")
    degree = pairing(DivisorClass({section: 1}), components, graph)
    if degree != 1:
        failures.append(f"section {section} meets the fiber {degree} times")
    return failures


def verify_fiber_class(
    components: DivisorClass, type_label: str, section: str, graph: CurveGraph | None = None
) -> bool:
    failures = fiber_class_failures(components, type_label, section, graph)
    for failure in failures:
        logger.error(f"fiber {components} of type {type_label}: {failure}")
    return not failures


def numerically_equivalent(first: DivisorClass, second: DivisorClass, graph: CurveGraph | None = None) -> bool:
    return intersection_vector(first - second, graph) == intersection_vector(DivisorClass(), graph)


def identity_kind(lhs: DivisorClass, rhs: DivisorClass, graph: CurveGraph | None = None) -> str | None:
    """"coefficients" when the classes agree term by term, "numerical" when they only pair alike."""
    if lhs == rhs:
        return "coefficients"
    if numerically_equivalent(lhs, rhs, graph):
        return "numerical"
    return None


def verify_class_identity(lhs: DivisorClass, rhs: DivisorClass, graph: CurveGraph | None = None) -> bool:
    """lhs ≡ rhs, either coefficient-wise or against every curve of the graph."""
    return identity_kind(lhs, rhs, graph) is not None


@dataclass(frozen=True)
class ReducibleFiber:
    type_label: str
    components: DivisorClass

    @property
    def label(self) -> str:
        return extended_diagram(self.type_label).label


@dataclass(frozen=True)
class FiberEmbedding:
    """One way of placing the reducible fibers of a fibration into the curve graph."""

    fibration: str
    variant: str
    sections: tuple[str, ...]
    fibers: tuple[ReducibleFiber, ...]

    @property
    def name(self) -> str:
        return f"{self.fibration}({self.variant})" if self.variant else self.fibration

    @property
    def fiber_class(self) -> DivisorClass:
        return self.fibers[0].components


def _fiber(type_label: str, text: str) -> ReducibleFiber:
    return ReducibleFiber(type_label, DivisorClass.parse(text))


FIBER_EMBEDDINGS = (
    FiberEmbedding(
        "std",
        "a",
        ("a7",),
        (
            _fiber("Ê7", "L3 + 2a1 + 3a2 + 4a3 + 2L2 + 3a4 + 2a5 + a6"),
            _fiber("Ê7", "b5 + 2b4 + 3b3 + 4b2 + 2b1 + 3L1 + 2a9 + a8"),
        ),
    ),
    FiberEmbedding(
        "std",
        "b",
        ("a7",),
        (
            _fiber("Ê7", "R2 + 2a1 + 3a2 + 4a3 + 2L2 + 3a4 + 2a5 + a6"),
            _fiber("Ê7", "R1 + 2b4 + 3b3 + 4b2 + 2b1 + 3L1 + 2a9 + a8"),
        ),
    ),
    FiberEmbedding(
        "alt",
        "",
        ("a1", "b4"),
        (
            _fiber("D̂12", "a2 + 2a3 + L2 + 2a4 + 2a5 + 2a6 + 2a7 + 2a8 + 2a9 + 2L1 + b1 + 2b2 + b3"),
            _fiber("Â1", "L3 + R1"),
            _fiber("Â1", "R2 + b5"),
        ),
    ),
    FiberEmbedding(
        "bfd",
        "a",
        ("a9",),
        (
            _fiber("D̂6", "L1 + b1 + 2b2 + 2b3 + 2b4 + b5 + R1"),
            _fiber("Ê8", "2a1 + 4a2 + 6a3 + 3L2 + 5a4 + 4a5 + 3a6 + 2a7 + a8"),
        ),
    ),
    FiberEmbedding(
        "bfd",
        "b",
        ("a5",),
        (
            _fiber("D̂6", "R2 + L2 + L3 + 2a1 + 2a2 + 2a3 + a4"),
            _fiber("Ê8", "2b4 + 4b3 + 6b2 + 3b1 + 5L1 + 4a9 + 3a8 + 2a7 + a6"),
        ),
    ),
    FiberEmbedding(
        "max",
        "a",
        ("b4",),
        (_fiber("D̂14", "R2 + L3 + 2a1 + 2a2 + 2a3 + 2a4 + 2a5 + 2a6 + 2a7 + 2a8 + 2a9 + 2L1 + 2b2 + b1 + b3"),),
    ),
    FiberEmbedding(
        "max",
        "b",
        ("a1",),
        (_fiber("D̂14", "b5 + R1 + 2b4 + 2b3 + 2b2 + 2L1 + 2a9 + 2a8 + 2a7 + 2a6 + 2a5 + 2a4 + 2a3 + L2 + a2"),),
    ),
)


def embedding(name: str) -> FiberEmbedding:
    for candidate in FIBER_EMBEDDINGS:
        if candidate.name == name:
            return candidate
    raise UnknownType(f"no fiber embedding named {name!r}")


def embedding_failures(candidate: FiberEmbedding, graph: CurveGraph | None = None) -> list[str]:
    """Every fiber is of its type and meets every section once; fibers are disjoint and equivalent."""
    graph = graph or curve_graph()
    failures = []
    for fiber in candidate.fibers:
        for section in candidate.sections:
            failures.extend(
                f"{fiber.label}: {failure}"
                for failure in fiber_class_failures(fiber.components, fiber.type_label, section, graph)
            )
    for index, fiber in enumerate(candidate.fibers):
        for other in candidate.fibers[index + 1 :]:
            touching = [
                (first, second)
                for first in fiber.components.support()
                for second in other.components.support()
                if first == second or graph.intersection(first, second)
            ]
            if touching:
                failures.append(f"{fiber.label} and {other.label} meet along {touching}")
            if not numerically_equivalent(fiber.components, other.components, graph):
                failures.append(f"{fiber.label} and {other.label} are not numerically equivalent")
    return failures


@dataclass(frozen=True)
class ClassIdentity:
    """lhs ≡ rhs in the Néron-Severi group; ``printed_rhs`` keeps a differing published form."""

    name: str
    lhs: DivisorClass
    rhs: DivisorClass
    printed_rhs: DivisorClass | None = None


def class_identities() -> list[ClassIdentity]:
    hyperplane = polarizing_divisor()
    fiber = {candidate.name: candidate.fiber_class for candidate in FIBER_EMBEDDINGS}
    curve = DivisorClass.curve
    parse = DivisorClass.parse
    return [
        ClassIdentity(
            "std(a)",
            hyperplane - fiber["std(a)"] - curve("L2"),
            parse("a1 + 2a2 + 3a3 + 3a4 + 3a5 + 3a6 + 3a7 + 2a8 + a9"),
        ),
        ClassIdentity(
            "std(b)",
            2 * hyperplane - fiber["std(b)"] - curve("L1") - curve("L2") - curve("L3"),
            parse("2a1 + 3a2 + 4a3 + 4a4 + 4a5 + 4a6 + 4a7 + 3a8 + 2a9 + b1 + 2b2 + 2b3 + 2b4 + 2b5"),
        ),
        ClassIdentity(
            "alt",
            hyperplane - fiber["alt"] - curve("L1"),
            parse("a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9 + b1 + 2b2 + 2b3 + 2b4 + b5"),
            printed_rhs=parse("a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9 + b1 + 2b2 + b3"),
        ),
        ClassIdentity(
            "bfd(a)",
            hyperplane - fiber["bfd(a)"] - curve("L3"),
            parse("a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9"),
        ),
        ClassIdentity(
            "bfd(b)",
            2 * hyperplane - fiber["bfd(b)"] - curve("L1") - 2 * curve("L2"),
            parse("2a1 + 4a2 + 6a3 + 6a4 + 6a5 + 5a6 + 4a7 + 3a8 + 2a9 + b1 + 2b2 + 2b3 + 2b4 + 2b5"),
        ),
        ClassIdentity(
            "max(a)",
            2 * hyperplane - fiber["max(a)"] - curve("R1"),
            parse("b1 + 2b2 + 3b3 + 4b4 + 3b5"),
        ),
        ClassIdentity(
            "max(a) cubic",
            3 * hyperplane - fiber["max(a)"] - curve("R1") - curve("R2") - curve("L1"),
            parse("a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8 + a9 + 2b1 + 4b2 + 5b3 + 6b4 + 5b5"),
        ),
    ]

