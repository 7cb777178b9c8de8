import sys
from pathlib import Path

import numpy as np
import pytest

# make the shared ensembles module importable regardless of invocation dir
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0x5EED)
