import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cpmatch.corpus import load_text
from cpmatch.index import build_index

import alabar_data


@pytest.fixture(scope="session")
def alabar_text():
    return load_text(alabar_data.RAW)


@pytest.fixture(scope="session")
def alabar_index(alabar_text):
    return build_index(alabar_text)


@pytest.fixture(scope="session")
def abab_index():
    return build_index(load_text(b"abab"))
