# Standard Library
import json
import logging

# First Party
from k3_verifier.divisors.curves import CurveGraph, DivisorClass, curve_graph, pairing, polarizing_divisor
from k3_verifier.divisors.fibers import FIBER_EMBEDDINGS, class_identities, embedding_failures, identity_kind
from k3_verifier.exactalg.intmatrix import IntMatrix
from k3_verifier.model import CheckResult, CheckStatus, OutputFormat

logger = logging.getLogger(__name__)


def negated_cartan(size: int) -> IntMatrix:
    return IntMatrix.from_rows(
        [[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(size)] for i in range(size)]
    )


def graph_checks(graph: CurveGraph | None = None) -> list[CheckResult]:
    graph = graph or curve_graph()
    checks = []
    a_chain = graph.restriction([f"a{i}" for i in range(1, 10)]) == negated_cartan(9)
    checks.append(_check("a1..a9 is -A9", a_chain))
    b_chain = graph.restriction([f"b{i}" for i in range(1, 6)]) == negated_cartan(5)
    checks.append(_check("b1..b5 is -A5", b_chain))
    square = pairing(polarizing_divisor(), polarizing_divisor(), graph)
    checks.append(_check("H.H = 4", square == 4, f"H.H = {square}"))
    symmetric = graph.matrix.is_symmetric() and all(graph.matrix[i, i] == -2 for i in range(len(graph.names)))
    checks.append(_check("symmetric with -2 diagonal", symmetric))
    checks.append(CheckResult(name="rank of the curve graph", status=CheckStatus.PASS, detail=str(graph.rank())))
    return checks


def embedding_checks(graph: CurveGraph | None = None) -> list[CheckResult]:
    checks = []
    for candidate in FIBER_EMBEDDINGS:
        failures = embedding_failures(candidate, graph)
        fibers = " + ".join(fiber.label for fiber in candidate.fibers)
        detail = "; ".join(failures) if failures else f"{fibers}, sections {', '.join(candidate.sections)}"
        checks.append(_check(f"fibers {candidate.name}", not failures, detail))
    return checks


def identity_checks(graph: CurveGraph | None = None) -> list[CheckResult]:
    checks = []
    for identity in class_identities():
        kind = identity_kind(identity.lhs, identity.rhs, graph)
        checks.append(_check(f"identity {identity.name}", kind is not None, kind or f"{identity.lhs - identity.rhs}"))
        if identity.printed_rhs is not None:
            printed = identity_kind(identity.lhs, identity.printed_rhs, graph)
            detail = f"printed right-hand side {identity.printed_rhs} " + (
                f"holds ({printed})" if printed else f"does not hold, corrected to {identity.rhs}"
            )
            logger.info(f"identity {identity.name}: {detail}")
            name = f"identity {identity.name} as printed"
            checks.append(CheckResult(name=name, status=CheckStatus.SKIP, detail=detail))
    return checks


def divisor_checks(graph: CurveGraph | None = None) -> list[CheckResult]:
    graph = graph or curve_graph()
    return graph_checks(graph) + embedding_checks(graph) + identity_checks(graph)


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    if not passed:
        logger.error(f"{name} failed {detail}".rstrip())
    return CheckResult(name=name, status=CheckStatus.PASS if passed else CheckStatus.FAIL, detail=detail)


def intersection_table_markdown(graph: CurveGraph | None = None) -> str:
    graph = graph or curve_graph()
    lines = ["| · | " + " | ".join(graph.names) + " |", "|---" * (len(graph.names) + 1) + "|"]
    for row, name in enumerate(graph.names):
        cells = (str(graph.matrix[row, col]) for col in range(len(graph.names)))
        lines.append(f"| {name} | " + " | ".join(cells) + " |")
    return "\n".join(lines)


def render_divisors(output_format: OutputFormat, graph: CurveGraph | None = None) -> str:
    graph = graph or curve_graph()
    checks = divisor_checks(graph)
    hyperplane = polarizing_divisor()
    if output_format == OutputFormat.JSON:
        payload = {
            "curves": list(graph.names),
            "matrix": [[graph.matrix[i, j] for j in range(len(graph.names))] for i in range(len(graph.names))],
            "polarizing_divisor": str(hyperplane),
            "polarizing_degrees": {name: pairing(hyperplane, DivisorClass({name: 1}), graph) for name in graph.names},
            "checks": [check.model_dump(mode="json") for check in checks],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2)
    lines = [intersection_table_markdown(graph), "", f"H = {hyperplane}", ""]
    if output_format == OutputFormat.MARKDOWN:
        lines += ["| check | status | detail |", "|---|---|---|"]
        lines += [f"| {check.name} | {check.status.value} | {check.detail} |" for check in checks]
    else:
        lines += [f"{check.status.value.upper():4}  {check.name}  {check.detail}".rstrip() for check in checks]
    return "\n".join(lines)
