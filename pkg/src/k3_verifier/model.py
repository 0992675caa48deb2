# pylint: disable=no-name-in-module
# Standard Library
import re
from enum import Enum
from typing import Annotated

# Third Party
from pydantic import BaseModel, Field, StringConstraints, computed_field, field_validator

# First Party
from k3_verifier.constants import ALT, BFD, MAX, STD
from k3_verifier.errors import LatticeSpecError
from k3_verifier.lattices.lattice import parse_lattice_spec

_FIBER_TERM = re.compile(r"^(\d*)(I\d+\*?|II\*?|III\*?|IV\*?)$")


class FibrationKind(str, Enum):
    STD = STD
    ALT = ALT
    BFD = BFD
    MAX = MAX


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    MARKDOWN = "markdown"


class FiberEntry(BaseModel):
    place: Annotated[str, StringConstraints(min_length=1, max_length=200)]
    kodaira: Annotated[str, StringConstraints(min_length=1, max_length=10)]
    ade: Annotated[str, StringConstraints(max_length=10)]
    count: Annotated[int, Field(ge=1, le=24)]


class FiberConfigReport(BaseModel):
    fibration: FibrationKind
    assignments: dict[str, str] = {}
    fibers: list[FiberEntry]
    mw_torsion: Annotated[str, StringConstraints(min_length=1, max_length=40)]
    mw_rank: Annotated[int, Field(ge=0)]
    euler: int


class ExpectedRow(BaseModel):
    fibration: FibrationKind
    locus: Annotated[str, StringConstraints(min_length=1, max_length=20)]
    label: Annotated[str, StringConstraints(min_length=1, max_length=60)]
    picard: Annotated[int, Field(ge=16, le=18)]
    fibers: Annotated[str, StringConstraints(min_length=1, max_length=80)]
    mw: Annotated[str, StringConstraints(min_length=1, max_length=20)]
    lattice: Annotated[str, StringConstraints(min_length=1, max_length=80)]
    disc_group: Annotated[str, StringConstraints(min_length=1, max_length=20)]
    gauge: str | None = None

    @field_validator("fibers", mode="before")
    @classmethod
    def check_fibers(cls, value):
        terms = [term.strip() for term in str(value).split("+")]
        bad = [term for term in terms if not _FIBER_TERM.match(term)]
        if bad:
            raise ValueError(f"The fiber list '{value}' contains unreadable terms {bad}")
        return value

    @field_validator("lattice", mode="before")
    @classmethod
    def check_lattice(cls, value):
        try:
            parse_lattice_spec(value)
        except LatticeSpecError as error:
            raise ValueError(f"The lattice label '{value}' cannot be parsed: {error}") from error
        return value


class TableRow(ExpectedRow):
    status: CheckStatus
    diff: list[str] = []
    lattice_aliases: list[str] = []


class FibrationTable(BaseModel):
    fibration: FibrationKind
    rows: list[TableRow]


class CheckResult(BaseModel):
    name: Annotated[str, StringConstraints(min_length=1, max_length=200)]
    status: CheckStatus
    detail: str = ""


class SuiteReport(BaseModel):
    suite: Annotated[str, StringConstraints(min_length=1, max_length=40)]
    checks: list[CheckResult]
    elapsed: Annotated[float, Field(ge=0)]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> CheckStatus:
        if any(check.status == CheckStatus.FAIL for check in self.checks):
            return CheckStatus.FAIL
        return CheckStatus.PASS
