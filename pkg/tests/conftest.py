import os
import sys
from pathlib import Path

import pytest

# Add the project root directory to Python path
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

os.environ.setdefault("APP_ENV", "production")

from folding.core.utils.helpers import prime_powers_between  # noqa: E402


@pytest.fixture
def small_prime_powers():
    """Prime powers cheap enough for exhaustive evaluation in the default run."""
    return prime_powers_between(2, 9)
