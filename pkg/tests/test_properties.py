import pytest

from property_suites import SUITES


@pytest.mark.parametrize("name", sorted(SUITES))
def test_property_suite(name):
    assert SUITES[name]() > 0
