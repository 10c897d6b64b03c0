import pytest

from coset_graphs.verify import VerifyContext


@pytest.fixture(scope="session")
def ctx() -> VerifyContext:
    """Shared heavy artifacts: enumerated groups, orbits, census results."""
    return VerifyContext()
