"""Shared data for the test suite: the 20-agent reference scenario."""

import numpy as np
import pytest

from opiniondyn import build_term_set

# Initial linguistic opinions of the 20-agent worked example, as term indices.
REFERENCE_TERMS = [0, 3, 6, 0, 0, 0, 5, 3, 3, 3, 5, 1, 0, 5, 3, 0, 4, 3, 4, 3]

# Heterogeneous confidence-bound scenarios: case 2 lowers agent 10's bound
# from 0.3 to 0.2, case 3 lowers agent 17's from 0.7 to 0.3.
HETERO_CASE1 = [0.2, 0.5, 0.3, 0.4, 0.2, 0.1, 0.9, 0.6, 0.5, 0.3,
                0.2, 0.1, 0.4, 0.4, 0.5, 0.3, 0.7, 0.4, 0.2, 0.2]
HETERO_CASE2 = list(HETERO_CASE1)
HETERO_CASE2[9] = 0.2
HETERO_CASE3 = list(HETERO_CASE1)
HETERO_CASE3[16] = 0.3


@pytest.fixture(scope="session")
def term_set():
    return build_term_set(3, 2)


@pytest.fixture(scope="session")
def reference_values(term_set):
    return term_set.values[np.array(REFERENCE_TERMS)]
