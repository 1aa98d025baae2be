import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from piggyqec.stabilizer import build_coset_table, builtin_codes


@pytest.fixture(scope="session")
def catalog():
    return builtin_codes()


@pytest.fixture(scope="session")
def coset_tables(catalog):
    return {name: build_coset_table(code) for name, code in catalog.items()}
