# Standard Library
import logging
import time
from collections.abc import Callable, Mapping

# First Party
from k3_verifier.configuration import K3_J30_CHAIN_EXACT, K3_PROPERTY_CASES, K3_RANDOM_SEED
from k3_verifier.constants import (
    ALT,
    BFD,
    FIBRATIONS,
    LOCUS_A0,
    LOCUS_GENERIC,
    LOCUS_J30,
    LOCUS_RES_ALT,
    LOCUS_RES_BFD,
    LOCUS_RES_STD,
    MAX,
    PICARD_RANK,
    STD,
    SUITE_DIVISORS,
    SUITE_DUALITY,
    SUITE_FIBRATIONS,
    SUITE_LATTICES,
    SUITE_QUARTIC,
)
from k3_verifier.divisors.render import divisor_checks
from k3_verifier.duality.bundles import susy_bundle_exponents
from k3_verifier.duality.ftheory import ftheory_e8_form, ftheory_so32_form, lambda_weight_check
from k3_verifier.duality.tables import emit_tables
from k3_verifier.errors import PullbackMismatch, VerificationError
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.properties import run_properties
from k3_verifier.fibrations.classify import classify_fibers, two_torsion_present
from k3_verifier.fibrations.identities import (
    CONSTANT,
    HOLDS,
    J30_WEIGHT,
    j30_chain_report,
    j30_weight_ratio,
    residual_extremes,
    siegel_restriction,
)
from k3_verifier.fibrations.loci import locus
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.weierstrass import discriminant_conventions_agree
from k3_verifier.fibrations.witnesses import witness
from k3_verifier.lattices.frames import EXPECTED_FRAMES, classify_frame_lattices, lattice_label_isomorphisms
from k3_verifier.lattices.lattice import parse_lattice_spec
from k3_verifier.lattices.quadratic_form import discriminant_form, fqf_isomorphic, target_form
from k3_verifier.model import CheckResult, CheckStatus, SuiteReport
from k3_verifier.quartic.derivations.bfd_derivation import BfdDerivation
from k3_verifier.quartic.derivations.derivation_factory import DerivationFactory
from k3_verifier.quartic.pencils import contains, verify_pencil_incidences
from k3_verifier.quartic.surface import (
    QuarticParams,
    lines_concurrent_at_p1,
    params_from_J,
    params_to_J,
    quartic_poly,
)
from k3_verifier.quartic.symmetries import (
    nikulin_involution_verify,
    nikulin_psi,
    verify_param_symmetries,
    verify_van_geemen_sarti,
)

logger = logging.getLogger(__name__)

Step = Callable[[], list[CheckResult]]

# fiber configurations and Mordell-Weil torsion of the four generic models
GENERIC_FIBERS = {
    STD: ("2III* + 6I1", "{𝕀}"),
    ALT: ("I8* + 2I2 + 6I1", "ℤ/2ℤ"),
    BFD: ("II* + I2* + 6I1", "{𝕀}"),
    MAX: ("I10* + 8I1", "{𝕀}"),
}

WITNESS_LOCI = (LOCUS_RES_STD, LOCUS_RES_ALT, LOCUS_RES_BFD, LOCUS_J30, LOCUS_A0)

# rank 16 frames whose discriminant form must be that of the polarizing lattice
TARGET_FRAMES = ("E7+E7", "E8+D6", "D14")


def outcome(name: str, passed: bool, detail: str = "") -> CheckResult:
    if not passed:
        logger.error(f"check '{name}' failed {detail}".rstrip())
    return CheckResult(name=name, status=CheckStatus.PASS if passed else CheckStatus.FAIL, detail=detail)


def informational(name: str, detail: str) -> CheckResult:
    logger.info(f"{name}: {detail}")
    return CheckResult(name=name, status=CheckStatus.SKIP, detail=detail)


def from_results(results: Mapping[str, bool]) -> list[CheckResult]:
    return [outcome(name, holds) for name, holds in results.items()]


def guarded(name: str, step: Step) -> list[CheckResult]:
    """Run one step; a raised verification error becomes a single failed check."""
    try:
        return step()
    except VerificationError as error:
        logger.error(f"check '{name}' raised {type(error).__name__}: {error}")
        return [CheckResult(name=name, status=CheckStatus.FAIL, detail=f"{type(error).__name__}: {error}")]


# lattices


def _frames() -> list[CheckResult]:
    results = classify_frame_lattices()
    found = {result.summands: result.torsion for result in results}
    checks = [
        outcome(f"frame {result.root_label} with MW {result.torsion_label}", result.expected, f"case {result.case}")
        for result in results
    ]
    missing = [summands for summands in EXPECTED_FRAMES if summands not in found]
    checks.append(outcome("exactly four frames", not missing and len(results) == 4, f"missing {missing}"))
    return checks


def _target_forms() -> list[CheckResult]:
    target = target_form()
    checks = []
    for spec in TARGET_FRAMES:
        form = discriminant_form(parse_lattice_spec(spec))
        checks.append(outcome(f"disc({spec}) is the polarizing form", fqf_isomorphic(form, target), form.describe()))
    return checks


def _isomorphism_classes() -> list[CheckResult]:
    return [
        outcome(f"{' ≅ '.join(entry.labels)}", entry.verified, f"rank {entry.rank}, disc {entry.disc_group}")
        for entry in lattice_label_isomorphisms()
    ]


def _properties(env_variables: Mapping) -> Step:
    def step() -> list[CheckResult]:
        cases = int(env_variables[K3_PROPERTY_CASES])
        failures = run_properties(cases, int(env_variables[K3_RANDOM_SEED]))
        return [
            outcome(f"exact algebra: {name}", not failed, failed[0] if failed else f"{cases} cases")
            for name, failed in failures.items()
        ]

    return step


def lattice_steps(env_variables: Mapping) -> list[tuple[str, Step]]:
    return [
        ("frame classification", _frames),
        ("discriminant forms", _target_forms),
        ("lattice label isomorphisms", _isomorphism_classes),
        ("exact algebra properties", _properties(env_variables)),
    ]


def divisor_steps(env_variables: Mapping) -> list[tuple[str, Step]]:
    return [("divisor combinatorics", divisor_checks)]


# quartic


def _derivation(which: str) -> Step:
    def step() -> list[CheckResult]:
        derivation = DerivationFactory.create_derivation(which)
        pulled = derivation.derive()
        mu = derivation.matches_j_model()
        return [
            outcome(f"{which} pullback reproduces the closed form", True, f"pencil {derivation.pencil}"),
            outcome(f"{which} pullback is the J-model rescaled", mu == derivation.scale, f"mu = {mu}"),
            informational(f"{which} cofactor", str(pulled.cofactor)),
        ]

    return step


def _gauge_round_trip() -> list[CheckResult]:
    point = params_to_J(params_from_J())
    expected = tuple(JElem.var(name) for name in ("J2", "J3", "J4", "J5", "J6"))
    return [outcome("params_to_J after params_from_J is the identity", point.values == expected)]


def _printed_variants() -> list[CheckResult]:
    """Sign and exponent variants of the involution, the bfd substitution and the T pencil, reported as skips."""
    params = QuarticParams.symbolic()
    surface = quartic_poly(params).F
    printed_psi = mpoly.divides(surface, nikulin_psi(params, printed=True).pull_back(surface))
    detail = "preserves the quartic" if printed_psi else "does not preserve the quartic"
    checks = [informational("psi with last component L Z^2", detail)]
    try:
        BfdDerivation(printed_sign=True).pull_back(params)
        detail = "yields a Weierstrass model"
    except PullbackMismatch as error:
        detail = f"yields no Weierstrass model ({error})"
    checks.append(informational("bfd substitution with a minus sign in Z", detail))
    printed_t = contains("T", "R2", params, printed=True)
    checks.append(informational("T with C2 Z - L3 W^2", "contains R2" if printed_t else "does not contain R2"))
    return checks


def quartic_steps(env_variables: Mapping) -> list[tuple[str, Step]]:
    steps: list[tuple[str, Step]] = [
        ("parameter symmetries", lambda: from_results(verify_param_symmetries())),
        ("nikulin involution", lambda: from_results(nikulin_involution_verify())),
        ("pencil incidences", lambda: from_results(verify_pencil_incidences())),
        (
            "lines through P1",
            lambda: [outcome("L1, L2, L3 meet at P1", lines_concurrent_at_p1(QuarticParams.symbolic()))],
        ),
        ("gauge", _gauge_round_trip),
        ("van Geemen-Sarti translation", lambda: from_results(verify_van_geemen_sarti())),
    ]
    steps += [(f"{which} derivation", _derivation(which)) for which in FIBRATIONS]
    steps.append(("closed forms as printed", _printed_variants))
    return steps


# fibrations


def _generic_fibers(which: str) -> Step:
    def step() -> list[CheckResult]:
        config = classify_fibers(model(which), locus(LOCUS_GENERIC).skeleton(which), PICARD_RANK)
        fibers, mw = GENERIC_FIBERS[which]
        return [
            outcome(f"{which} generic fibers", config.summary() == fibers, config.summary()),
            outcome(f"{which} Mordell-Weil torsion", config.mw_torsion == mw, config.mw_torsion),
            outcome(f"{which} Euler numbers sum to 24", config.euler == 24, str(config.euler)),
            outcome(f"{which} two-torsion section", two_torsion_present(model(which)) == (which == ALT)),
            outcome(f"{which} discriminant conventions agree", discriminant_conventions_agree(model(which))),
        ]

    return step


def _j30_chain(env_variables: Mapping) -> Step:
    def step() -> list[CheckResult]:
        checks = []
        for member in j30_chain_report(exact=bool(int(env_variables[K3_J30_CHAIN_EXACT]))):
            passed = member.status == HOLDS
            detail = member.detail()
            if member.status == CONSTANT:
                detail = f"off by the constant {member.constant}: {detail}"
            checks.append(outcome(f"J30 chain: {member.name}", passed, detail))
        ratio = j30_weight_ratio()
        checks.append(outcome(f"J30 has weight {J30_WEIGHT}", ratio == 2**J30_WEIGHT, str(ratio)))
        return checks

    return step


def _siegel(which: str) -> Step:
    def step() -> list[CheckResult]:
        restricted, rescaling = siegel_restriction(which)
        return [outcome(f"{which} at J4=0 is {restricted.name}", True, f"s = {rescaling.s}, w^2 = {rescaling.w2}")]

    return step


def _witness(name: str) -> Step:
    def step() -> list[CheckResult]:
        return [outcome(f"witness on {name}", True, witness(name).describe())]

    return step


def fibration_steps(env_variables: Mapping) -> list[tuple[str, Step]]:
    steps = [(f"{which} generic fibers", _generic_fibers(which)) for which in FIBRATIONS]
    steps += [
        ("J30 chain", _j30_chain(env_variables)),
        ("residual extremes", lambda: from_results(residual_extremes())),
    ]
    steps += [(f"{which} Siegel restriction", _siegel(which)) for which in (BFD, ALT)]
    steps += [(f"witness {name}", _witness(name)) for name in WITNESS_LOCI]
    return steps


# duality


def _ftheory() -> list[CheckResult]:
    e8 = ftheory_e8_form()
    so32 = ftheory_so32_form()
    return [
        outcome("E8 x E8 form is the bfd model", True, e8.name),
        outcome("so(32) form is the alt model", True, so32.name),
    ]


def _bundles() -> list[CheckResult]:
    exponents = susy_bundle_exponents()
    return [outcome("bundle exponents (M, L) = (6, 7)", exponents == (6, 7), str(exponents))]


def _tables() -> list[CheckResult]:
    checks = []
    for table in emit_tables():
        for row in table.rows:
            detail = "; ".join(row.diff) if row.diff else f"{row.fibers}, {row.gauge}"
            passed = row.status == CheckStatus.PASS
            checks.append(outcome(f"{table.fibration.value} table: {row.label}", passed, detail))
    return checks


def duality_steps(env_variables: Mapping) -> list[tuple[str, Step]]:
    return [
        ("F-theory forms", _ftheory),
        ("lambda dependence", lambda: from_results(lambda_weight_check())),
        ("bundle exponents", _bundles),
        ("lattice polarization tables", _tables),
    ]


SUITE_STEPS: dict[str, Callable[[Mapping], list[tuple[str, Step]]]] = {
    SUITE_LATTICES: lattice_steps,
    SUITE_DIVISORS: divisor_steps,
    SUITE_QUARTIC: quartic_steps,
    SUITE_FIBRATIONS: fibration_steps,
    SUITE_DUALITY: duality_steps,
}


def run_suite(name: str, env_variables: Mapping) -> SuiteReport:
    """Run every check of a suite in declaration order."""
    if name not in SUITE_STEPS:
        raise NotImplementedError(f"Suite {name} is not supported")
    logger.info(f"Running the {name} suite")
    start = time.perf_counter()
    checks: list[CheckResult] = []
    for step_name, step in SUITE_STEPS[name](env_variables):
        logger.debug(f"{name}: {step_name}")
        checks += guarded(step_name, step)
    report = SuiteReport(suite=name, checks=checks, elapsed=time.perf_counter() - start)
    failed = sum(check.status == CheckStatus.FAIL for check in checks)
    logger.info(f"{name} suite: {len(checks) - failed} of {len(checks)} checks passed in {report.elapsed:.1f}s")
    return report
