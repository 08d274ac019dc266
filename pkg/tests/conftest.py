import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def envelopes():
    with open(FIXTURES / "bound_envelopes.json") as fh:
        return json.load(fh)
