import pytest

from makespan import make_instance


@pytest.fixture
def demo_instance():
    """Two machines, jobs (1, 1, 3): small enough to enumerate by hand."""
    return make_instance(2, [1, 1, 3])
