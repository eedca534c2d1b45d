import pathlib

import numpy as np
import pytest

from freqrect import io

DATA = pathlib.Path(__file__).parent / "data"

# the odd-weight 4-bit vectors and a second known 3-independent family
O_SET = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
         (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1)]
W_SET = [(1, 0, 1, 0), (1, 0, 0, 1), (1, 1, 0, 1), (0, 1, 0, 1),
         (1, 1, 1, 0), (0, 1, 1, 0), (0, 0, 0, 1), (0, 0, 1, 0)]


@pytest.fixture(scope="session")
def table2_set():
    return io.parse_fr_set((DATA / "table2_mofr44.frs").read_text())


@pytest.fixture(scope="session")
def mofs14_golden_text():
    return (DATA / "mofs14_golden.frs").read_text()


@pytest.fixture(scope="session")
def mofs14_golden(mofs14_golden_text):
    return io.parse_fr_set(mofs14_golden_text)


@pytest.fixture(scope="session")
def table4_arrays():
    out = {}
    for block in (DATA / "table4_A_p7.txt").read_text().split("\n\n"):
        lines = block.strip().splitlines()
        alpha = int(lines[0].split()[1])
        out[alpha] = np.array([[int(x) for x in r.split()] for r in lines[1:]])
    return out
