import pytest

from zcolor import Crossing, Diagram

# Exact document from the file-format definition.
TREFOIL_DOC = (
    '{"name":"trefoil","arc_count":3,"free_circles":0,'
    '"crossings":[{"over":0,"under":[1,2]},{"over":1,"under":[0,2]},'
    '{"over":2,"under":[0,1]}]}'
)


def make_trefoil() -> Diagram:
    return Diagram(
        name="trefoil",
        arc_count=3,
        crossings=(
            Crossing(over=0, under=(1, 2)),
            Crossing(over=1, under=(0, 2)),
            Crossing(over=2, under=(0, 1)),
        ),
    )


@pytest.fixture
def trefoil() -> Diagram:
    return make_trefoil()


@pytest.fixture
def two_free_circles() -> Diagram:
    return Diagram(name="two circles", arc_count=2, crossings=(), free_circles=2)
