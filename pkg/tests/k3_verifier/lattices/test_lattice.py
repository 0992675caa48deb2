# Third Party
import pytest

# First Party
from k3_verifier.errors import BadRank, LatticeSpecError
from k3_verifier.lattices.lattice import (
    ade_lattice,
    even_unimodular_dn_plus,
    format_lattice_label,
    hyperbolic_plane,
    parse_lattice_spec,
    sum_of,
)


@pytest.mark.parametrize(
    "kind, n, det",
    [("A", 1, -2), ("A", 2, 3), ("A", 3, -4), ("D", 4, 4), ("D", 7, -4), ("E", 6, 3), ("E", 7, -2), ("E", 8, 1)],
)
def test_root_lattice_determinants(kind, n, det):
    lattice = ade_lattice(kind, n)
    assert lattice.rank == n
    assert lattice.det() == det


def test_root_lattices_are_negative_definite_with_roots_on_the_diagonal():
    lattice = ade_lattice("E", 8)
    assert lattice.gram.diagonal_entries() == [-2] * 8
    assert lattice.summands == ("E8",)


@pytest.mark.parametrize("kind, n", [("A", 0), ("D", 3), ("E", 9), ("B", 2)])
def test_bad_rank(kind, n):
    with pytest.raises(BadRank):
        ade_lattice(kind, n)


def test_d16_plus_is_even_unimodular():
    lattice = even_unimodular_dn_plus(16)
    assert lattice.rank == 16
    assert abs(lattice.det()) == 1
    with pytest.raises(BadRank):
        even_unimodular_dn_plus(12)


def test_parse_lattice_spec_accepts_both_notations():
    ascii_form = parse_lattice_spec("H+E7+E7")
    table_form = parse_lattice_spec("H⊕E7(−1)⊕E7(−1)")
    assert ascii_form == table_form
    assert ascii_form.rank == 16
    assert ascii_form.summands == ("H", "E7", "E7")
    assert ascii_form.blocks == ((0, 2), (2, 9), (9, 16))
    assert parse_lattice_spec("H+D16^+").summands == ("H", "D16+")


@pytest.mark.parametrize("spec", ["", "H+", "H+X3", "E9", "A2+E5", "H E8"])
def test_parse_lattice_spec_rejects_malformed_input(spec):
    with pytest.raises(LatticeSpecError):
        parse_lattice_spec(spec)


def test_summand_lattices_split_the_direct_sum():
    lattice = sum_of([hyperbolic_plane(), ade_lattice("D", 6), ade_lattice("A", 1)])
    parts = lattice.summand_lattices()
    assert [part.summands for part in parts] == [("H",), ("D6",), ("A1",)]
    assert parts[1].gram == ade_lattice("D", 6).gram


def test_format_lattice_label():
    assert format_lattice_label(("H", "E7", "E7")) == "H⊕E7(−1)⊕E7(−1)"
    assert format_lattice_label(("H", "D16+")) == "H⊕D16⁺(−1)"
