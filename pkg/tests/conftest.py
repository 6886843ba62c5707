import pytest

from poincareseries.config import reset_config


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from DEFAULT_CONFIG."""
    reset_config()
    yield
    reset_config()
