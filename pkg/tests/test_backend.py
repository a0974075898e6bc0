import math
import random

import numpy as np
import pytest

from colorgroups import backend
from colorgroups import _kernels_numpy as knp

numba_kernels = pytest.importorskip("colorgroups._kernels_numba")


def _random_gen_matrix(rng, n, count):
    gens = []
    for _ in range(count):
        img = list(range(n))
        rng.shuffle(img)
        gens.append(img)
    return np.array(gens, dtype=np.int64)


def test_backends_build_identical_chains():
    rng = random.Random(9001)
    for _ in range(60):
        n = rng.randint(1, 10)
        mat = _random_gen_matrix(rng, n, rng.randint(1, 4))
        a = numba_kernels.build_chain(mat, n)
        b = knp.build_chain(mat, n)
        for x, y in zip(a, b):
            assert np.array_equal(x, y)


def test_backends_agree_on_orders_and_sift():
    rng = random.Random(9002)
    idn = None
    for _ in range(30):
        n = rng.randint(2, 9)
        mat = _random_gen_matrix(rng, n, 2)
        chain_a = numba_kernels.build_chain(mat, n)
        chain_b = knp.build_chain(mat, n)
        order_a = math.prod(int(x) for x in chain_a[4])
        order_b = math.prod(int(x) for x in chain_b[4])
        assert order_a == order_b
        probe = np.array(_random_gen_matrix(rng, n, 1)[0], dtype=np.int64)
        ra = numba_kernels.sift(chain_a, probe)
        rb = knp.sift(chain_b, probe)
        assert np.array_equal(ra, rb)


def test_centralizer_masks_agree():
    from itertools import permutations
    perms = np.array(list(permutations(range(5))), dtype=np.int64)
    gens = np.array([[1, 0, 3, 2, 4], [0, 2, 1, 3, 4]], dtype=np.int64)
    a = numba_kernels.centralizer_mask(perms, gens)
    b = knp.centralizer_mask(perms, gens)
    assert np.array_equal(a, b)


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("COLORGROUPS_BACKEND", "numpy")
    assert backend.resolve_backend()[0] == "numpy"
    monkeypatch.setenv("COLORGROUPS_BACKEND", "numba")
    assert backend.resolve_backend()[0] == "numba"
    monkeypatch.setenv("COLORGROUPS_BACKEND", "nonsense")
    with pytest.raises(ValueError):
        backend.resolve_backend()
    monkeypatch.delenv("COLORGROUPS_BACKEND")
    assert backend.resolve_backend()[0] in ("numba", "numpy")


def test_numpy_backend_runs_whole_pipeline(monkeypatch):
    monkeypatch.setenv("COLORGROUPS_BACKEND", "numpy")
    from colorgroups.analysis import coloring_group
    from colorgroups.graphs import EdgeColoredGraph
    g = EdgeColoredGraph(7, [(0, 1, 3), (2, 1, 1), (2, 3, 2), (3, 4, 1),
                             (2, 5, 3), (5, 6, 2)])
    grp = coloring_group(g)
    assert grp.order() == 168


def test_benchmark_runs_and_backends_agree(capsys):
    from colorgroups.bench import run_benchmark
    results = run_benchmark(repeat=1, degree=5)
    out = capsys.readouterr().out
    assert "agreement" in out or len(results) == 1


def test_identity_chain():
    empty = np.zeros((0, 4), dtype=np.int64)
    for kernels in (numba_kernels, knp):
        chain = kernels.build_chain(empty, 4)
        assert math.prod(int(x) for x in chain[4]) == 1
        probe = np.array([1, 0, 2, 3], dtype=np.int64)
        assert np.array_equal(kernels.sift(chain, probe), probe)
