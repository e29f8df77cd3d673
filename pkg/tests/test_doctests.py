"""Run the usage examples embedded in module docstrings."""

import doctest

import pytest

from twobridge import census, cli, crosscheck, diagram, planar, rational, words


@pytest.mark.parametrize(
    "mod", [words, diagram, planar, census, rational, crosscheck, cli],
    ids=lambda m: m.__name__)
def test_module_doctests(mod):
    failures, _ = doctest.testmod(mod, verbose=False)
    assert failures == 0
