# Standard Library
import argparse
import json
import logging
import sys
from collections.abc import Sequence

# First Party
from k3_verifier.common import initialise_logs
from k3_verifier.configuration import DEBUG_MODE, K3_VERIFIER_LOG_FILE, REQUIRED_ENV_VARS
from k3_verifier.constants import FIBRATIONS, SUITES
from k3_verifier.divisors.render import divisor_checks, render_divisors
from k3_verifier.duality.gauge import gauge_algebra
from k3_verifier.duality.tables import all_rows_pass, emit_tables, render_json, render_markdown
from k3_verifier.environment_wrapper import validate_environment
from k3_verifier.errors import LatticeSpecError, UsageError, VerificationError
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.fibrations.classify import FiberConfig, classify_fibers, specialize
from k3_verifier.fibrations.loci import LOCI, LOCUS_ALIASES, complete_assignment, locus, locus_of
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.witnesses import CHECKED_FIBRATIONS, witness
from k3_verifier.lattices.frames import isomorphic_labels
from k3_verifier.lattices.lattice import parse_lattice_spec
from k3_verifier.lattices.quadratic_form import discriminant_form, group_label
from k3_verifier.model import CheckStatus, OutputFormat, SuiteReport
from k3_verifier.quartic.derivations.derivation_factory import derive_pullback
from k3_verifier.quartic.pencils import verify_pencil_incidences
from k3_verifier.quartic.surface import PARAM_NAMES, QuarticParams
from k3_verifier.quartic.symmetries import nikulin_involution_verify, verify_param_symmetries, verify_van_geemen_sarti
from k3_verifier.suites import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

ALL = "all"
ASSIGNABLE = ("J2", "J3", "J4", "J5", "J6", "a")
QUARTIC_CHECKS = ("symmetries", "involution", "pencils", "derive", "translation")


def parse_assignment(pairs: Sequence[str], allowed: Sequence[str]) -> dict[str, JElem]:
    """K=V pairs; V is a rational number or a polynomial such as 2*s*u or s^2."""
    values = {}
    for pair in pairs:
        name, separator, text = pair.partition("=")
        name = name.strip()
        if not separator or not text.strip():
            raise UsageError(f"expected K=V, got {pair!r}")
        if name not in allowed:
            raise UsageError(f"cannot assign {name!r}, expected one of {', '.join(allowed)}")
        try:
            values[name] = JElem.coerce(MPoly.from_text(text))
        except (ValueError, ZeroDivisionError) as error:
            raise UsageError(f"cannot read the value {text!r} of {name}: {error}") from error
    return values


# verify


def render_reports(reports: list[SuiteReport], output_format: OutputFormat, timings: bool) -> str:
    if output_format == OutputFormat.JSON:
        exclude = None if timings else {"elapsed"}
        payload = [report.model_dump(mode="json", exclude=exclude) for report in reports]
        return json.dumps(payload, ensure_ascii=False, indent=2)
    lines = []
    for report in reports:
        header = f"== {report.suite}: {report.status.value}"
        lines.append(f"{header} ({report.elapsed:.1f}s)" if timings else header)
        lines += [f"{check.status.value.upper():4}  {check.name}  {check.detail}".rstrip() for check in report.checks]
    return "\n".join(lines)


def command_verify(args, env_variables) -> int:
    suites = SUITES if args.suite == ALL else (args.suite,)
    reports = [run_suite(suite, env_variables) for suite in suites]
    print(render_reports(reports, OutputFormat(args.format), args.timings))
    return EXIT_OK if all(report.status == CheckStatus.PASS for report in reports) else EXIT_FAILED


# tables


def command_tables(args, env_variables) -> int:
    fibrations = FIBRATIONS if args.fibration == ALL else (args.fibration,)
    tables = emit_tables(fibrations, args.expected)
    rendered = render_json(tables) if args.format == OutputFormat.JSON.value else render_markdown(tables)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as output:
            output.write(rendered)
        logger.info(f"tables written to {args.out}")
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if all_rows_pass(tables) else EXIT_FAILED


# classify and witness


def describe_config(config: FiberConfig) -> str:
    lattice = " ≅ ".join(config.lattice.labels) if config.lattice else "not tabulated"
    return (
        f"{config.fibration}: {config.summary()}; MW {config.mw_torsion}, rank {config.mw_rank}; "
        f"ρ = {config.picard}; lattice H+{'+'.join(config.root_summands())} in {lattice}; "
        f"gauge {gauge_algebra(config)}"
    )


def classify_at(fibration: str, assignment: dict[str, JElem], picard: int | None = None) -> FiberConfig:
    assignment = complete_assignment(assignment)
    specialized = specialize(model(fibration), assignment) if assignment else model(fibration)
    rendered = {name: str(value) for name, value in assignment.items()}
    if specialized.is_rational():
        return classify_fibers(specialized, picard=picard, assignments=rendered)
    place = locus_of(assignment)
    if place is not None:
        return classify_fibers(specialized, place.skeleton(fibration), place.picard, rendered)
    return classify_fibers(specialized, picard=picard, assignments=rendered)


def command_classify(args, env_variables) -> int:
    assignment = parse_assignment(args.set or [], ASSIGNABLE)
    picard = None
    if args.locus:
        place = locus(args.locus)
        picard = place.picard
        found = witness(place.name).assignment() if place.by_witness else place.assignment
        assignment = {**{name: JElem.coerce(value) for name, value in found.items()}, **assignment}
    config = classify_at(args.fibration, assignment, picard)
    if args.format == OutputFormat.JSON.value:
        print(config.to_report().model_dump_json(indent=2))
    else:
        print(describe_config(config))
    return EXIT_OK


def command_witness(args, env_variables) -> int:
    place = locus(args.locus)
    found = witness(place.name)
    print(f"{place.name} ({place.label}): {found.describe()}")
    for fibration in CHECKED_FIBRATIONS[place.name]:
        config = classify_fibers(specialize(model(fibration), found.assignment()), picard=place.picard)
        print(f"  {describe_config(config)}")
    return EXIT_OK


# lattice


def command_lattice_disc(args, env_variables) -> int:
    lattice = parse_lattice_spec(args.spec)
    form = discriminant_form(lattice)
    print(f"{lattice.name()}: rank {lattice.rank}, determinant {lattice.det()}")
    print(f"discriminant group {group_label(list(form.orders))}, form {form.describe()}")
    others = isomorphic_labels(lattice.name())
    if others:
        print(f"isomorphic to {', '.join(others)}")
    return EXIT_OK


# divisors


def command_divisors(args, env_variables) -> int:
    print(render_divisors(OutputFormat(args.format)))
    failed = any(check.status == CheckStatus.FAIL for check in divisor_checks())
    return EXIT_FAILED if failed else EXIT_OK


# quartic


def quartic_params(pairs: Sequence[str]) -> QuarticParams:
    values = parse_assignment(pairs, PARAM_NAMES)
    return QuarticParams(*(values[name].as_mpoly() if name in values else MPoly.var(name) for name in PARAM_NAMES))


def command_quartic_verify(args, env_variables) -> int:
    params = quartic_params(args.set or [])
    if args.check == "symmetries":
        results = verify_param_symmetries(params)
    elif args.check == "involution":
        results = nikulin_involution_verify(params)
    elif args.check == "pencils":
        results = verify_pencil_incidences(params)
    elif args.check == "translation":
        results = verify_van_geemen_sarti()
    else:
        for fibration in FIBRATIONS:
            pulled = derive_pullback(fibration, params)
            print(f"{fibration}: a2 = {pulled.a2}; a4 = {pulled.a4}; a6 = {pulled.a6}")
        return EXIT_OK
    for name in results:
        print(f"PASS  {name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3-verify",
        description="Exact verification of the Jacobian elliptic fibrations on H+E7+E7 polarized K3 surfaces.",
    )
    parser.add_argument("--debug", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--log-file", help="Path of the rotating log file.")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run verification suites.")
    verify.add_argument("--suite", choices=(*SUITES, ALL), default=ALL)
    verify.add_argument("--format", choices=(OutputFormat.TEXT.value, OutputFormat.JSON.value), default="text")
    verify.add_argument("--timings", action="store_true", help="Report elapsed times.")
    verify.set_defaults(handler=command_verify)

    tables = commands.add_parser("tables", help="Recompute the lattice polarization tables.")
    tables.add_argument("--fibration", choices=(*FIBRATIONS, ALL), default=ALL)
    tables.add_argument("--format", choices=(OutputFormat.JSON.value, OutputFormat.MARKDOWN.value), default="markdown")
    tables.add_argument("--out", help="Write to this file instead of standard output.")
    tables.add_argument("--expected", help="Expected tables file, the packaged one by default.")
    tables.set_defaults(handler=command_tables)

    classify = commands.add_parser("classify", help="Classify the singular fibers of a specialized model.")
    classify.add_argument("--fibration", choices=FIBRATIONS, required=True)
    classify.add_argument("--set", action="append", metavar="K=V", help="Assign J2..J6 or a.")
    classify.add_argument("--locus", choices=(*LOCI, *LOCUS_ALIASES))
    classify.add_argument("--format", choices=(OutputFormat.TEXT.value, OutputFormat.JSON.value), default="text")
    classify.set_defaults(handler=command_classify)

    witness_parser = commands.add_parser("witness", help="Find a rational witness on a special locus.")
    witness_parser.add_argument("--locus", choices=(*CHECKED_FIBRATIONS, *LOCUS_ALIASES), required=True)
    witness_parser.set_defaults(handler=command_witness)

    lattice = commands.add_parser("lattice", help="Lattice computations.")
    lattice_commands = lattice.add_subparsers(dest="lattice_command", required=True)
    disc = lattice_commands.add_parser("disc", help="Discriminant form of a direct sum such as H+E8+D6.")
    disc.add_argument("--spec", required=True)
    disc.set_defaults(handler=command_lattice_disc)

    divisors = commands.add_parser("divisors", help="Intersection matrix and divisor identities.")
    divisors.add_argument("--format", choices=[output_format.value for output_format in OutputFormat], default="text")
    divisors.set_defaults(handler=command_divisors)

    quartic = commands.add_parser("quartic", help="Identities on the quartic normal form.")
    quartic_commands = quartic.add_subparsers(dest="quartic_command", required=True)
    quartic_verify = quartic_commands.add_parser("verify", help="Check one family of identities.")
    quartic_verify.add_argument("--check", choices=QUARTIC_CHECKS, required=True)
    quartic_verify.add_argument("--set", action="append", metavar="K=V", help="Assign alpha..zeta.")
    quartic_verify.set_defaults(handler=command_quartic_verify)
    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE
    try:
        env_variables = validate_environment(REQUIRED_ENV_VARS)
    except OSError as error:
        print(f"k3-verify: {error}", file=sys.stderr)
        return EXIT_USAGE
    debug = "1" if args.debug else env_variables[DEBUG_MODE]
    initialise_logs(args.log_file or env_variables[K3_VERIFIER_LOG_FILE], debug)
    try:
        return args.handler(args, env_variables)
    except (UsageError, LatticeSpecError, KeyError) as error:
        print(f"k3-verify: {error}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as error:
        logger.error(f"{args.command} failed: {error}")
        print(f"FAIL  {error}")
        return EXIT_FAILED


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
