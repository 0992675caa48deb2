# Standard Library
import logging
import re
from collections.abc import Iterable

# Third Party
from pydantic import RootModel

# First Party
from k3_verifier.common import get_expected_tables_path, load_expected_tables_into_map
from k3_verifier.constants import FIBRATIONS
from k3_verifier.duality.gauge import gauge_algebra, rank_check
from k3_verifier.errors import RowMismatch, VerificationError
from k3_verifier.fibrations.classify import FiberConfig, classify_fibers, specialize
from k3_verifier.fibrations.loci import locus
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.witnesses import witness
from k3_verifier.lattices.lattice import format_lattice_label
from k3_verifier.model import CheckStatus, ExpectedRow, FibrationTable, TableRow

logger = logging.getLogger(__name__)

_TWIST = re.compile(r"\((?:-|−)1\)")
_TOKEN = re.compile(r"H|[ADE]\d+(?:\^\+)?")


class TableSet(RootModel[list[FibrationTable]]):
    pass


def plain_label(spec: str) -> str:
    """Plain summand label: H⊕E7(−1)⊕E7(−1) becomes H+E7+E7 and D16⁺ becomes D16^+."""
    return _TWIST.sub("", spec).replace("⊕", "+").replace("⁺", "^+").replace(" ", "")


def table_label(plain: str) -> str:
    return format_lattice_label(tuple(token.replace("^+", "+") for token in _TOKEN.findall(plain)))


def row_config(fibration: str, expected: ExpectedRow) -> FiberConfig:
    """Fiber configuration of one table row: symbolic on parametrized loci, at a witness otherwise."""
    place = locus(expected.locus)
    if place.by_witness:
        found = witness(place.name)
        specialized = specialize(model(fibration), found.assignment())
        return classify_fibers(specialized, picard=place.picard, assignments={"witness": found.describe()})
    specialized = specialize(model(fibration), place.assignment)
    assignments = {name: str(value) for name, value in place.assignment.items()}
    return classify_fibers(specialized, place.skeleton(fibration), place.picard, assignments)


def compare_row(fibration: str, expected: ExpectedRow, config: FiberConfig, strict: bool = False) -> TableRow:
    diff: dict[str, tuple[str, str]] = {}
    values = expected.model_dump()
    got_fibers = config.summary()
    if got_fibers != expected.fibers:
        diff["fibers"] = (expected.fibers, got_fibers)
        values["fibers"] = got_fibers
    if config.mw_torsion != expected.mw:
        diff["mw"] = (expected.mw, config.mw_torsion)
        values["mw"] = config.mw_torsion
    if config.picard != expected.picard:
        diff["picard"] = (str(expected.picard), str(config.picard))
        values["picard"] = config.picard
    aliases: list[str] = []
    if config.lattice is None:
        diff["lattice"] = (expected.lattice, "none tabulated")
    else:
        wanted = plain_label(expected.lattice)
        if wanted in config.lattice.labels:
            aliases = [table_label(label) for label in config.lattice.labels if label != wanted]
        else:
            diff["lattice"] = (expected.lattice, " ≅ ".join(config.lattice.labels))
        if config.lattice.disc_group != expected.disc_group:
            diff["disc_group"] = (expected.disc_group, config.lattice.disc_group)
            values["disc_group"] = config.lattice.disc_group
    gauge = gauge_algebra(config)
    if expected.gauge is not None and gauge.label() != expected.gauge:
        diff["gauge"] = (expected.gauge, gauge.label())
    values["gauge"] = gauge.label()
    if not rank_check(gauge, config.picard):
        diff["gauge rank"] = ("14, 15 or 16", str(gauge.rank))
    status = CheckStatus.PASS if not diff else CheckStatus.FAIL
    if diff:
        mismatch = RowMismatch(fibration, expected.label, diff)
        if strict:
            raise mismatch
        logger.error(f"{mismatch}")
    rendered = [f"{key}: expected {want} got {got}" for key, (want, got) in diff.items()]
    return TableRow(**values, status=status, diff=rendered, lattice_aliases=aliases)


def emit_table(fibration: str, expected_rows: Iterable[ExpectedRow], strict: bool = False) -> FibrationTable:
    rows = []
    for expected in expected_rows:
        try:
            row = compare_row(fibration, expected, row_config(fibration, expected), strict)
        except RowMismatch:
            raise
        except VerificationError as error:
            if strict:
                raise RowMismatch(fibration, expected.label, {"error": ("", str(error))}) from error
            logger.error(f"{fibration} row '{expected.label}' could not be computed: {error}")
            row = TableRow(**expected.model_dump(), status=CheckStatus.FAIL, diff=[f"error: {error}"])
        rows.append(row)
    return FibrationTable(fibration=fibration, rows=rows)


def emit_tables(
    fibrations: Iterable[str] = FIBRATIONS, expected_path: str | None = None, strict: bool = False
) -> list[FibrationTable]:
    """The four lattice-polarization tables, each row recomputed and compared with the shipped values."""
    expected = load_expected_tables_into_map(expected_path or get_expected_tables_path())
    return [emit_table(fibration, expected.get(fibration, []), strict) for fibration in fibrations]


def all_rows_pass(tables: Iterable[FibrationTable]) -> bool:
    return all(row.status == CheckStatus.PASS for table in tables for row in table.rows)


# rendering

_HEADER = ("Locus", "ρ", "Singular fibers", "MW", "Lattice", "Disc. group", "Gauge algebra", "Status")


def render_markdown(tables: Iterable[FibrationTable]) -> str:
    blocks = []
    for table in tables:
        lines = [f"### {table.fibration.value}", "", "| " + " | ".join(_HEADER) + " |", "|" + "---|" * len(_HEADER)]
        for row in table.rows:
            lattice = " ≅ ".join([row.lattice, *row.lattice_aliases])
            cells = (row.label, str(row.picard), row.fibers, row.mw, lattice, row.disc_group, row.gauge or "")
            lines.append("| " + " | ".join([*cells, row.status.value]) + " |")
            lines.extend(f"|  |  |  |  |  |  |  | {entry} |" for entry in row.diff)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_json(tables: list[FibrationTable]) -> str:
    return TableSet(tables).model_dump_json(indent=2) + "\n"
