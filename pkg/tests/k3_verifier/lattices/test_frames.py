# Standard Library
from fractions import Fraction
from unittest import TestCase

# Third Party
import pytest

# First Party
from k3_verifier.errors import Inconsistent, NegativeRank
from k3_verifier.lattices.frames import (
    ade_multisets,
    class_min_norms,
    classify_frame_lattices,
    exceeded_lengths,
    glue_length_bound,
    isomorphic_labels,
    lattice_label_isomorphisms,
    mw_torsion_from_frame,
    prime_lengths,
    pruned_frame_candidates,
    shioda_tate_rank,
)
from k3_verifier.lattices.lattice import parse_lattice_spec
from k3_verifier.lattices.quadratic_form import (
    abelian_invariants,
    discriminant_form,
    isotropic_subgroups,
    overlattice_form,
    target_form,
)


def test_small_multisets():
    assert ade_multisets(2) == [("A2",), ("A1", "A1")]
    assert ("D4",) in ade_multisets(4)
    assert len(set(ade_multisets(8))) == len(ade_multisets(8))


def test_class_minima_of_minuscule_weights():
    assert sorted(class_min_norms("D12").values()) == [0, 1, 3, 3]
    assert sorted(class_min_norms("E7").values()) == [0, Fraction(3, 2)]
    assert sorted(class_min_norms("A3").values()) == [0, Fraction(3, 4), Fraction(3, 4), 1]


def test_exactly_four_frames():
    frames = classify_frame_lattices()
    assert {frame.root_label: frame.torsion_label for frame in frames} == {
        "E7+E7": "{𝕀}",
        "E8+D6": "{𝕀}",
        "D14": "{𝕀}",
        "D12+A1+A1": "ℤ/2ℤ",
    }
    assert all(frame.expected for frame in frames)
    assert all(frame.root_rank == 14 for frame in frames)
    assert {frame.root_label: frame.case for frame in frames}["D12+A1+A1"] == "II"


@pytest.mark.parametrize(
    "root, target, label",
    [
        ("E7+E7", None, "{𝕀}"),
        ("D14", None, "{𝕀}"),
        ("D12+A1+A1", None, "ℤ/2ℤ"),
        ("D14+A1", "H+E8+E7", "ℤ/2ℤ"),
        ("D16", "H+E8+E8", "ℤ/2ℤ"),
        ("E8+E8", "H+E8+E8", "{𝕀}"),
        ("D12+A3", "H+E8+D7", "ℤ/2ℤ"),
        ("E8+D6+A1", "H+E8+D6+A1", "{𝕀}"),
    ],
)
def test_mw_torsion_from_frame(root, target, label):
    target_form = discriminant_form(parse_lattice_spec(target)) if target else None
    assert mw_torsion_from_frame(parse_lattice_spec(root), target_form) == label


class TestFrameErrors(TestCase):
    def test_no_admissible_glue(self):
        self.assertRaises(Inconsistent, mw_torsion_from_frame, parse_lattice_spec("A1+A1+E8+D4"))

    def test_hyperbolic_summand_is_not_a_root_lattice(self):
        self.assertRaises(Inconsistent, mw_torsion_from_frame, parse_lattice_spec("H+E8+D4"))


def test_shioda_tate_rank():
    assert shioda_tate_rank([7, 7], 16) == 0
    assert shioda_tate_rank([7, 7], 17) == 1
    assert shioda_tate_rank([12, 1, 1], 16) == 0
    with pytest.raises(NegativeRank):
        shioda_tate_rank([8, 8], 16)
    with pytest.raises(ValueError):
        shioda_tate_rank([1], 21)


def test_lattice_label_isomorphisms_are_verified():
    classes = lattice_label_isomorphisms()
    assert [entry.rank for entry in classes] == [16, 17, 17, 17, 18]
    assert all(entry.verified for entry in classes)
    assert isomorphic_labels("H+D14") == ("H+E7+E7", "H+E8+D6")
    assert isomorphic_labels("H+E8+E7") == ()


def test_glue_length_bound():
    assert glue_length_bound(target_form(), 2) == 6
    assert glue_length_bound(target_form(), 3) == 4


def test_pruned_candidates_exceed_the_glue_length_bound():
    target = target_form()
    pruned = {candidate.root_label: candidate for candidate in pruned_frame_candidates()}
    assert dict(pruned["D4+D4+D4+A1+A1"].exceeded) == {2: 8}
    for label, candidate in pruned.items():
        form = discriminant_form(parse_lattice_spec(label))
        assert dict(candidate.exceeded) == exceeded_lengths(form, target)
        assert candidate.exceeded
    frames = {frame.root_label for frame in classify_frame_lattices()}
    assert not frames & set(pruned)


@pytest.mark.parametrize("spec", ["D4+A1+A1", "D12+A1+A1", "E7+E7+A1+A1", "D5+D5"])
def test_glue_never_shortens_a_group_by_more_than_twice_its_length(spec):
    form = discriminant_form(parse_lattice_spec(spec))
    for subgroup in isotropic_subgroups(form):
        glued = prime_lengths(overlattice_form(form, subgroup))
        invariants = abelian_invariants(list(subgroup), form.element_order)
        for prime, length in prime_lengths(form).items():
            glue_length = sum(1 for order in invariants if order % prime == 0)
            assert length <= 2 * glue_length + glued.get(prime, 0)
