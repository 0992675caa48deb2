# First Party
from k3_verifier.exactalg.intmatrix import IntMatrix, invariant_factors, smith_normal_form
from k3_verifier.lattices.lattice import ade_lattice


def assert_smith_decomposition(matrix):
    left, diagonal, right = smith_normal_form(matrix)
    assert left @ matrix @ right == diagonal
    assert diagonal.is_diagonal()
    assert abs(left.det()) == 1
    assert abs(right.det()) == 1
    entries = diagonal.diagonal_entries()
    assert all(entry >= 0 for entry in entries)
    for first, second in zip(entries, entries[1:]):
        if first == 0:
            assert second == 0
        else:
            assert second % first == 0
    return entries


def test_hyperbolic_plane_is_unimodular():
    assert invariant_factors(IntMatrix.from_rows([[0, 1], [1, 0]])) == [1, 1]


def test_e7_has_a_single_invariant_factor_two():
    gram = ade_lattice("E", 7).gram
    assert invariant_factors(gram) == [1, 1, 1, 1, 1, 1, 2]


def test_diagonal_input_is_already_normal():
    assert invariant_factors(IntMatrix.diagonal([2, 2])) == [2, 2]
    assert invariant_factors(IntMatrix.diagonal([6, 4])) == [2, 12]


def test_matrix_helpers():
    matrix = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert matrix.det() == -2
    assert matrix.transpose() == IntMatrix.from_rows([[1, 3], [2, 4]])
    assert matrix @ IntMatrix.identity(2) == matrix
    assert not matrix.is_symmetric()
    block = IntMatrix.block_diagonal([matrix, IntMatrix.diagonal([5])])
    assert block.shape == (3, 3)
    assert block[2, 2] == 5
    assert block[0, 2] == 0


def test_rectangular_and_singular_matrices():
    assert_smith_decomposition(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12]]))
    assert assert_smith_decomposition(IntMatrix.from_rows([[1, 1], [1, 1]])) == [1, 0]


def test_smith_decomposition_of_random_matrices(rng, property_cases):
    for case in range(property_cases):
        size = 16 if case == 0 else rng.randint(1, 8)
        matrix = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)])
        entries = assert_smith_decomposition(matrix)
        product = 1
        for entry in entries:
            product *= entry
        assert product == abs(matrix.det())
