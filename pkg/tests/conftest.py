import pytest

from pmclique import _kernels


@pytest.fixture(scope="session", autouse=True)
def _jit_warmup():
    # Compile (or load from disk cache) every numba kernel up front so the
    # timed acceptance checks measure the algorithms, not the compiler.
    _kernels.warmup()
