import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from grobcon.ioformats import load_entry

CORPUS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


def corpus_paths():
    return sorted(
        os.path.join(CORPUS_DIR, name)
        for name in os.listdir(CORPUS_DIR)
        if name.endswith(".json")
    )


@pytest.fixture(scope="session")
def corpus_entries():
    return [load_entry(p) for p in corpus_paths()]
