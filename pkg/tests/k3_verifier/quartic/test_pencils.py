# Third Party
import pytest

# First Party
from k3_verifier.errors import UnknownPencil
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.quartic.pencils import (
    INCIDENCES,
    PENCILS,
    contains,
    incidence_table,
    pencil,
    verify_pencil_incidences,
)
from k3_verifier.quartic.surface import QuarticParams

SYMBOLIC = QuarticParams.symbolic()


def test_every_pencil_contains_its_curves():
    results = verify_pencil_incidences()
    assert len(results) == sum(len(INCIDENCES[name]) for name in PENCILS)
    assert all(results.values())


def test_incidence_table_at_a_rational_point():
    table = incidence_table(QuarticParams.from_values([1, 2, 3, 4, 5, 6]))
    assert all(all(row.values()) for row in table.values())


def test_t_with_the_opposite_sign_misses_r2():
    assert contains("T", "R2", SYMBOLIC)
    assert not contains("T", "R2", SYMBOLIC, printed=True)


def test_line_pencils_are_linear():
    X, Z, W = mpoly.symbols("X", "Z", "W")
    assert pencil("L1", SYMBOLIC, 1, 2) == W - 2 * X
    assert pencil("L2", SYMBOLIC, 3, 1) == 3 * W - Z
    assert pencil("L3", SYMBOLIC, 1, 0).is_homogeneous(("X", "Y", "Z", "W"))


def test_pencil_members_vary_with_u_and_v():
    assert pencil("C1", SYMBOLIC, 1, 0) != pencil("C1", SYMBOLIC, 0, 1)
    assert pencil("C3", SYMBOLIC, MPoly.var("u"), MPoly.var("v")).degree("u") == 1


def test_unknown_pencil():
    with pytest.raises(UnknownPencil):
        pencil("C4", SYMBOLIC)
