import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from jordanmax.corpus import load_bundled  # noqa: E402


@pytest.fixture(scope="session")
def bundled():
    cache = {}

    def get(stem):
        if stem not in cache:
            cache[stem] = load_bundled(stem)
        return cache[stem]

    return get
