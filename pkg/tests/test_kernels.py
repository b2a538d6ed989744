import pytest

from pqegypt import _kernels
from pqegypt._kernels import _pysearch
from pqegypt.enumerator import depth_limit
from pqegypt.model import Params

CASES = [Params(2, 3, 7, 3), Params(3, 5, 7, 2), Params(5, 2, 6, 2), Params(2, 91, 13, 4), Params(2, 7, 8, 4)]


def test_backend_name():
    assert _kernels.backend() in ("cython", "python")


@pytest.mark.skipif(not _kernels.COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("prm", CASES)
def test_compiled_matches_pure(prm):
    args = (prm.p, prm.q, prm.alpha_p, prm.n, depth_limit(prm))
    assert _kernels._csearch.search_reduced(*args) == _pysearch.search_reduced(*args)
    assert _kernels._csearch.find_record(*args) == _pysearch.find_record(*args)


@pytest.mark.parametrize("prm", CASES)
def test_pure_flag_routes_to_python(prm):
    args = (prm.p, prm.q, prm.alpha_p, prm.n, depth_limit(prm))
    assert _kernels.search_reduced(*args, pure=True) == _pysearch.search_reduced(*args)


def test_large_instance_falls_back():
    # q * p**alpha beyond 64-bit range goes to the pure kernel
    args = (2, 2**61 - 1, 3, 4, 3)
    assert _kernels.find_record(*args) == _pysearch.find_record(*args)
