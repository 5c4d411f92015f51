import os
import subprocess
import sys

import numpy as np
import pytest

from dwgen import kernels
from dwgen.kernels import numpy_impl

numba_impl = pytest.importorskip("dwgen.kernels.numba_impl")


@pytest.fixture
def data():
    rng = np.random.default_rng(3)
    return dict(
        u1=rng.random(5000), u2=rng.random(5000),
        words=rng.integers(0, 2 ** 63, 5000, dtype=np.uint64) * np.uint64(2),
        history=rng.integers(0, 2 ** 63, 98, dtype=np.uint64),
        radices=np.array([7, 11, 13], dtype=np.int64),
    )


def test_splitmix(data):
    a, sa = numpy_impl.splitmix64_fill(np.uint64(1234567), 1000)
    b, sb = numba_impl.splitmix64_fill(np.uint64(1234567), 1000)
    assert np.array_equal(a, b) and sa == sb


def test_gfsr(data):
    ha, hb = data["history"].copy(), data["history"].copy()
    assert np.array_equal(numpy_impl.gfsr_fill(ha, 1001), numba_impl.gfsr_fill(hb, 1001))
    assert np.array_equal(ha, hb)


def test_elementwise_kernels(data):
    u1, u2 = data["u1"], data["u2"]
    pairs = [
        (numpy_impl.to_unit(data["words"]), numba_impl.to_unit(data["words"])),
        (numpy_impl.gaussian_pick(u1, u2, 37, 0.2), numba_impl.gaussian_pick(u1, u2, 37, 0.2)),
        (numpy_impl.uniform_pick(u1, 256), numba_impl.uniform_pick(u1, 256)),
        (numpy_impl.bernoulli_retain(u1, 0.3, 17), numba_impl.bernoulli_retain(u1, 0.3, 17)),
        (numpy_impl.cents(u1, 10000.0), numba_impl.cents(u1, 10000.0)),
    ]
    for a, b in pairs:
        assert a.dtype == b.dtype and np.array_equal(a, b)


def test_mixed_radix(data):
    r = data["radices"]
    flat = np.arange(int(np.prod(r)), dtype=np.int64)
    a = numpy_impl.decode_mixed_radix(flat, r)
    assert np.array_equal(a, numba_impl.decode_mixed_radix(flat, r))
    assert [tuple(x) for x in a[:3]] == [(0, 0, 0), (0, 0, 1), (0, 0, 2)]
    assert tuple(a[-1]) == (6, 10, 12)


def test_env_flag_selects_numpy_backend():
    code = "from dwgen import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=dict(os.environ, DWGEN_DISABLE_NUMBA="1"), check=True)
    assert out.stdout.strip() == "numpy"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=dict(os.environ, DWGEN_DISABLE_NUMBA="0"), check=True)
    assert out.stdout.strip() == "numba"


def test_artifacts_identical_across_backends(tmp_path):
    digests = []
    for flag in ("0", "1"):
        out = tmp_path / flag
        subprocess.run([sys.executable, "-m", "dwgen", "generate", "--preset", "constellation",
                        "--out", str(out)], check=True, capture_output=True,
                       env=dict(os.environ, DWGEN_DISABLE_NUMBA=flag))
        digests.append(sorted((p.name, p.read_bytes()) for p in out.iterdir()))
    assert digests[0] == digests[1]


def test_active_backend_reported():
    assert kernels.BACKEND in ("numba", "numpy")
