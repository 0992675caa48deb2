# Standard Library
import json
from unittest import TestCase

# Third Party
import pytest

# First Party
from k3_verifier.divisors.curves import DivisorClass, pairing, polarizing_divisor
from k3_verifier.divisors.fibers import (
    FIBER_EMBEDDINGS,
    class_identities,
    embedding,
    embedding_failures,
    extended_diagram,
    identity_kind,
    parse_type_label,
    verify_class_identity,
    verify_fiber_class,
)
from k3_verifier.divisors.render import divisor_checks, intersection_table_markdown, render_divisors
from k3_verifier.errors import UnknownCurve, UnknownType
from k3_verifier.model import CheckStatus, OutputFormat


@pytest.mark.parametrize(
    "label, marks",
    [
        ("Â1", [1, 1]),
        ("D̂6", [1, 1, 1, 1, 2, 2, 2]),
        ("Ê7", [1, 1, 2, 2, 2, 3, 3, 4]),
        ("Ê8", [1, 2, 2, 3, 3, 4, 4, 5, 6]),
    ],
)
def test_extended_diagram_marks(label, marks):
    assert sorted(extended_diagram(label).marks) == marks


def test_type_labels():
    assert parse_type_label("Ê7") == ("E", 7)
    assert parse_type_label("D^12") == ("D", 12)
    assert parse_type_label("A1") == ("A", 1)
    for label in ("E9", "D3", "X5", ""):
        with pytest.raises(UnknownType):
            parse_type_label(label)


def test_standard_fiber_class():
    fiber = DivisorClass.parse("L3 + 2a1 + 3a2 + 4a3 + 2L2 + 3a4 + 2a5 + a6")
    assert verify_fiber_class(fiber, "Ê7", "a7")
    assert not verify_fiber_class(fiber, "Ê8", "a7")
    assert not verify_fiber_class(fiber, "Ê7", "a1")


def test_base_fiber_class_and_alternate_fiber_class():
    assert verify_fiber_class(DivisorClass.parse("L1 + b1 + 2b2 + 2b3 + 2b4 + b5 + R1"), "D̂6", "a9")
    alternate = embedding("alt").fiber_class
    assert verify_fiber_class(alternate, "D̂12", "a1")
    assert verify_fiber_class(alternate, "D̂12", "b4")


def test_wrong_multiplicities_fail():
    fiber = DivisorClass.parse("L3 + 2a1 + 3a2 + 4a3 + 2L2 + 3a4 + 2a5 + 2a6")
    assert not verify_fiber_class(fiber, "Ê7", "a7")


def test_unknown_type_and_section():
    fiber = embedding("std(a)").fiber_class
    with pytest.raises(UnknownType):
        verify_fiber_class(fiber, "Ê9", "a7")
    with pytest.raises(UnknownCurve):
        verify_fiber_class(fiber, "Ê7", "P1")


@pytest.mark.parametrize("candidate", FIBER_EMBEDDINGS, ids=lambda candidate: candidate.name)
def test_every_embedding_is_consistent(candidate):
    assert embedding_failures(candidate) == []


def test_alternative_fibers_of_one_fibration_are_both_fibers():
    for name in ("std", "bfd", "max"):
        first = embedding(f"{name}(a)")
        second = embedding(f"{name}(b)")
        for candidate in (first, second):
            assert pairing(candidate.fiber_class, candidate.fiber_class) == 0
            assert pairing(polarizing_divisor(), candidate.fiber_class) > 0


@pytest.mark.parametrize("identity", class_identities(), ids=lambda identity: identity.name)
def test_every_class_identity_holds(identity):
    assert verify_class_identity(identity.lhs, identity.rhs)


def test_identity_kinds():
    identities = {identity.name: identity for identity in class_identities()}
    std = identities["std(a)"]
    assert identity_kind(std.lhs, std.rhs) in ("coefficients", "numerical")
    hyperplane = polarizing_divisor()
    assert identity_kind(hyperplane - hyperplane, DivisorClass()) == "coefficients"


def test_printed_alternate_identity_differs_along_b2():
    alternate = {identity.name: identity for identity in class_identities()}["alt"]
    assert alternate.printed_rhs is not None
    assert not verify_class_identity(alternate.lhs, alternate.printed_rhs)
    assert identity_kind(alternate.lhs, alternate.rhs) == "coefficients"
    assert pairing(alternate.lhs, DivisorClass.curve("b2")) == -1
    assert pairing(alternate.printed_rhs, DivisorClass.curve("b2")) == -2


class TestEmbeddingLookup(TestCase):
    def test_unknown_embedding(self):
        self.assertRaises(UnknownType, embedding, "std(c)")


def test_divisor_checks_pass():
    checks = divisor_checks()
    assert not [check for check in checks if check.status == CheckStatus.FAIL]
    assert [check.name for check in checks if check.status == CheckStatus.SKIP] == ["identity alt as printed"]


def test_render_formats():
    markdown = intersection_table_markdown()
    assert markdown.splitlines()[0].startswith("| · | a1 | a2 |")
    assert len(markdown.splitlines()) == 21
    payload = json.loads(render_divisors(OutputFormat.JSON))
    assert payload["matrix"][payload["curves"].index("L3")][payload["curves"].index("R1")] == 2
    assert payload["polarizing_degrees"]["R2"] == 3
    assert "PASS  identity std(a)" in render_divisors(OutputFormat.TEXT)
