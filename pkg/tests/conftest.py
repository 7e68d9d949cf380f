import pytest

from zetalab.mpcore import PrecisionContext


@pytest.fixture
def ctx():
    c = PrecisionContext(digits=30, guard=10)
    with c.workprec():
        yield c


@pytest.fixture
def ctx40():
    c = PrecisionContext(digits=40, guard=10)
    with c.workprec():
        yield c
