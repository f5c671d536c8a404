import pytest

from ratblow import construction as C
from ratblow import recipe as rc


@pytest.fixture(scope="session")
def canonical_recipe():
    return rc.packaged_canonical_assignment()


@pytest.fixture(scope="session")
def canonical_built(canonical_recipe):
    """The canonical surface Z with its two chains, built from the recipe."""
    return rc.build_recipe(rc.load_recipe(canonical_recipe))


@pytest.fixture(scope="session")
def pencil_solutions():
    return C.enumerate_pencils()


@pytest.fixture(scope="session")
def surface_Y(pencil_solutions):
    Y, report = C.build_Y(pencil_solutions[0])
    return Y, report
