# Standard Library
from fractions import Fraction

# Third Party
import pytest

# First Party
from k3_verifier.errors import Degenerate, NotIsotropic, TooLarge
from k3_verifier.exactalg.intmatrix import IntMatrix
from k3_verifier.lattices.lattice import Lattice, ade_lattice, parse_lattice_spec
from k3_verifier.lattices.quadratic_form import (
    FiniteQuadraticForm,
    abelian_invariants,
    discriminant_class,
    discriminant_form,
    fqf_isomorphic,
    group_label,
    isotropic_subgroups,
    overlattice_form,
    span,
    target_form,
)


def nonzero_values(form):
    return sorted(value for x, value in form.table().items() if x != form.zero())


def test_target_is_the_form_of_the_polarizing_lattice():
    form = discriminant_form(parse_lattice_spec("H+E7+E7"))
    assert form.orders == (2, 2)
    assert fqf_isomorphic(form, target_form())
    assert nonzero_values(form) == [Fraction(1, 2), Fraction(1, 2), Fraction(1)]


@pytest.mark.parametrize("spec", ["H+D14", "H+E8+D6", "E7+E7", "D6"])
def test_rank_sixteen_relatives_share_the_target_form(spec):
    assert fqf_isomorphic(discriminant_form(parse_lattice_spec(spec)), target_form())


@pytest.mark.parametrize("spec", ["A1+A1", "D4", "A3", "D8"])
def test_other_order_four_forms_differ_from_the_target(spec):
    assert not fqf_isomorphic(discriminant_form(parse_lattice_spec(spec)), target_form())


def test_known_generator_values():
    assert discriminant_form(ade_lattice("E", 7)).q_values == (Fraction(1, 2),)
    assert discriminant_form(ade_lattice("A", 1)).q_values == (Fraction(3, 2),)
    d7 = discriminant_form(ade_lattice("D", 7))
    assert d7.orders == (4,)
    assert sorted(d7.q(x) for x in d7.elements() if d7.element_order(x) == 4) == [Fraction(1, 4)] * 2
    assert discriminant_form(ade_lattice("E", 8)).is_trivial()


def test_d4_has_three_elements_of_value_one():
    form = discriminant_form(ade_lattice("D", 4))
    assert nonzero_values(form) == [Fraction(1)] * 3
    assert isotropic_subgroups(form) == [frozenset({form.zero()})]


def test_d8_glues_to_e8_along_either_spinor():
    form = discriminant_form(ade_lattice("D", 8))
    subgroups = isotropic_subgroups(form)
    assert [len(subgroup) for subgroup in subgroups] == [1, 2, 2]
    for subgroup in subgroups[1:]:
        assert overlattice_form(form, subgroup).is_trivial()


def test_overlattice_rejects_non_isotropic_subgroups():
    form = discriminant_form(ade_lattice("D", 4))
    generator = next(x for x in form.elements() if x != form.zero())
    with pytest.raises(NotIsotropic):
        overlattice_form(form, span(form, [generator]))


def test_orthogonal_sum_and_span():
    form = discriminant_form(ade_lattice("A", 1)).orthogonal_sum(discriminant_form(ade_lattice("A", 3)))
    assert form.orders == (2, 4)
    assert form.order == 8
    assert len(span(form, [(1, 1)])) == 4
    assert len(span(form, [(1, 0), (0, 2)])) == 4


def test_abelian_invariants():
    form = FiniteQuadraticForm((2, 4, 3), (Fraction(0),) * 3, ((Fraction(0),) * 3,) * 3)
    assert abelian_invariants(list(form.elements()), form.element_order) == [2, 12]


def test_discriminant_class_of_a_root_is_zero():
    lattice = ade_lattice("D", 6)
    form = discriminant_form(lattice)
    root_image = [lattice.gram[i, 0] for i in range(lattice.rank)]
    assert discriminant_class(lattice, root_image) == form.zero()


def test_degenerate_lattice():
    lattice = Lattice(IntMatrix.from_rows([[2, 2], [2, 2]]), ("x", "y"))
    with pytest.raises(Degenerate):
        discriminant_form(lattice)


def test_large_groups_are_refused():
    form = discriminant_form(parse_lattice_spec("+".join(["A1"] * 9)))
    with pytest.raises(TooLarge):
        isotropic_subgroups(form)
    with pytest.raises(TooLarge):
        form.table()


def test_group_label():
    assert group_label([2, 2]) == "ℤ2²"
    assert group_label([4]) == "ℤ4"
    assert group_label([2, 2, 2]) == "ℤ2³"
    assert group_label([]) == "0"
    assert group_label([1], style="mw") == "{𝕀}"
    assert group_label([2], style="mw") == "ℤ/2ℤ"
