import random

import pytest

from nilorbits import exactlin
from nilorbits._kernels_py import int_rank as py_rank
from nilorbits.orbit_enum import SO, SU, SpPQ, enumerate_orbits
from nilorbits.realize import centralizer_dim, realize

needs_ext = pytest.mark.skipif(not exactlin.HAVE_CYTHON, reason="compiled kernel not built")


def random_int_matrix(rng, m, n, lo=-4, hi=4):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def test_python_kernel_small_cases():
    assert py_rank([], 3) == 0
    assert py_rank([[0, 0], [0, 0]], 2) == 0
    assert py_rank([[1, 2], [2, 4]], 2) == 1
    assert py_rank([[0, 1], [1, 0]], 2) == 2


@needs_ext
def test_backends_agree_on_random_matrices():
    from nilorbits._kernels import int_rank as cy_rank
    rng = random.Random(7)
    for _ in range(300):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        M = random_int_matrix(rng, m, n, -2, 2)
        if rng.random() < 0.5 and m > 1:
            M[-1] = [a + b for a, b in zip(M[0], M[1 % m])]
        assert cy_rank(M, n) == py_rank(M, n)


@needs_ext
def test_compiled_kernel_reports_overflow():
    from nilorbits._kernels import int_rank as cy_rank
    big = 2 ** 40
    M = [[big, 1, 3], [1, big, 5], [7, 11, big]]
    with pytest.raises(OverflowError):
        cy_rank(M, 3)
    # the dispatcher falls back to exact integers
    assert exactlin.int_rank(M, 3, backend="cython") == 3


@pytest.mark.parametrize("backend", ["python", "cython"])
def test_centralizer_dim_independent_of_backend(backend):
    if backend == "cython" and not exactlin.HAVE_CYTHON:
        pytest.skip("compiled kernel not built")
    for form in (SU(2, 2), SO(3, 2), SpPQ(1, 2)):
        for o in enumerate_orbits(form):
            if o.fiber_index == 1:
                real = realize(o)
                assert centralizer_dim(real, form, backend) == centralizer_dim(real, form, "python")


def test_backend_flag():
    assert exactlin.KERNEL_BACKEND in ("cython", "python")
    assert exactlin.HAVE_CYTHON == (exactlin.KERNEL_BACKEND == "cython")
