import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fflseries.algebra import field_make  # noqa: E402

FIELDS = {
    "F2": (2, 1),
    "F3": (3, 1),
    "F4": (2, 2),
    "F5": (5, 1),
}


@pytest.fixture(params=sorted(FIELDS), ids=sorted(FIELDS))
def field(request):
    return field_make(*FIELDS[request.param])


def poly_arrays(field, nvars, max_len=3):
    """Strategy for raw coefficient arrays of a polynomial in nvars variables."""
    shape = st.tuples(*[st.integers(0, max_len)] * nvars)

    def build(s):
        size = int(np.prod(s)) * field.e
        return st.lists(st.integers(0, field.p - 1), min_size=size, max_size=size).map(
            lambda flat: np.array(flat, dtype=np.int64).reshape(tuple(s) + (field.e,))
        )

    return shape.flatmap(build)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n][1])
