import numpy as np
import pytest

import udc


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile/warm every hot kernel once so timed tests measure steady
    state, not JIT compilation."""
    from udc import linalg, oracle

    field = udc.make_field(29)
    code = udc.derive_code(udc.fourier_scheme(field, 7), udc.RowSelection(0, 1, 3))
    sent = code.encode([1, 2, 3])
    sent[0] = (sent[0] + 1) % 29
    sent[4] = (sent[4] + 2) % 29
    assert udc.decode(code, sent).ok
    book = oracle.codebook(code)
    oracle.nearest_codewords(book, book[:2])
    oracle.min_distance(code, method="enumerate")
    linalg.invert(field, np.array([[1, 2], [3, 4]]))
    linalg.determinant(field, np.array([[1, 2], [3, 4]]))
    yield
