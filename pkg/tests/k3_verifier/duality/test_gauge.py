# Third Party
import pytest

# First Party
from k3_verifier.constants import ALT, BFD, LOCUS_GENERIC, LOCUS_J45, MAX, PICARD_RANK, STD
from k3_verifier.duality.gauge import SPIN32_NOTE, GaugeLabel, fiber_algebra, gauge_algebra, rank_check
from k3_verifier.errors import UnknownFiber
from k3_verifier.fibrations.classify import classify_fibers, specialize
from k3_verifier.fibrations.loci import locus
from k3_verifier.fibrations.models import model


@pytest.mark.parametrize(
    "kodaira, algebra",
    [
        ("I1", None),
        ("II", None),
        ("I2", ("su(2)", 1)),
        ("I8*", ("so(24)", 12)),
        ("I12*", ("so(32)", 16)),
        ("III", ("su(2)", 1)),
        ("IV*", ("e6", 6)),
        ("III*", ("e7", 7)),
        ("II*", ("e8", 8)),
    ],
)
def test_fiber_algebra(kodaira, algebra):
    assert fiber_algebra(kodaira) == algebra


def test_unknown_fiber():
    with pytest.raises(UnknownFiber):
        fiber_algebra("V*")


@pytest.mark.parametrize(
    "which, label",
    [(STD, "e7 ⊕ e7"), (ALT, "so(24) ⊕ su(2) ⊕ su(2)"), (BFD, "e8 ⊕ so(12)"), (MAX, "so(28)")],
)
def test_generic_gauge_algebras(which, label):
    config = classify_fibers(model(which), locus(LOCUS_GENERIC).skeleton(which), PICARD_RANK)
    gauge = gauge_algebra(config)
    assert gauge.label() == label
    assert gauge.rank == 14
    assert rank_check(gauge, 16)


def test_spin32_note():
    place = locus(LOCUS_J45)
    config = classify_fibers(specialize(model(ALT), place.assignment), place.skeleton(ALT), place.picard)
    gauge = gauge_algebra(config)
    assert gauge.note == SPIN32_NOTE
    assert str(gauge) == f"so(32) ({SPIN32_NOTE})"


def test_rank_check_rejects_the_wrong_rank():
    assert not rank_check(GaugeLabel((("e8", 8),)), 16)
    assert not rank_check(GaugeLabel((("e8", 8),)), 19)


def test_empty_label():
    assert GaugeLabel(()).label() == "0"
