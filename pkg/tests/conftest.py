import numpy as np
import pytest

from fastdcst import build_tables


def rng(*key):
    """Deterministic per-test random stream."""
    return np.random.default_rng(list(key))


def max_rel(got, want):
    got = np.asarray(got, dtype=complex)
    want = np.asarray(want, dtype=complex)
    scale = np.max(np.abs(want))
    if scale == 0.0:
        return float(np.max(np.abs(got))) if len(got) else 0.0
    return float(np.max(np.abs(got - want)) / scale)


def rms_rel(got, want):
    got = np.asarray(got, dtype=complex)
    want = np.asarray(want, dtype=complex)
    denom = np.linalg.norm(want)
    if denom == 0.0:
        return float(np.linalg.norm(got))
    return float(np.linalg.norm(np.asarray(got) - want) / denom)


@pytest.fixture(scope="session")
def tables1024():
    return build_tables(1024)
