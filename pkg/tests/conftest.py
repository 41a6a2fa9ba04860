from __future__ import annotations

import pytest

from sepkit.oracle import named_separator_corpus, random_separator_corpus


@pytest.fixture(scope="session")
def small_corpus():
    """Random + named instances small enough for every brute-force oracle."""
    insts = random_separator_corpus(120, seed=11) + named_separator_corpus()
    return [inst for inst in insts if len(inst.graph().vertices) <= 16]
