import warnings

import pytest

from lerchphi.lerch import LerchWarning


@pytest.fixture
def quiet():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LerchWarning)
        yield
