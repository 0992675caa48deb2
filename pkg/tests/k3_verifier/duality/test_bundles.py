# Third Party
import pytest

# First Party
from k3_verifier.duality.bundles import BUNDLE_CHAINS, susy_bundle_exponents
from k3_verifier.errors import InconsistentSystem


def test_bundle_exponents():
    assert susy_bundle_exponents() == (6, 7)


def test_second_chain_alone_fixes_both_exponents():
    assert susy_bundle_exponents(BUNDLE_CHAINS[1:]) == (6, 7)


def test_inconsistent_chain():
    with pytest.raises(InconsistentSystem):
        susy_bundle_exponents([((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 1, 1))])


def test_underdetermined_chain():
    with pytest.raises(InconsistentSystem):
        susy_bundle_exponents([((1, 0, 0), (0, 1, 0))])
