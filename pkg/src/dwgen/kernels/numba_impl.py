"""numba-compiled kernels. Must stay bit-identical to ``numpy_impl``."""
import math

import numpy as np
from numba import njit

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_TWO_PI = 2.0 * math.pi
_INV_2_53 = 1.0 / 9007199254740992.0

GFSR_LONG = 98
GFSR_SHORT = 27


@njit(cache=True)
def _splitmix64_fill(state, n):
    out = np.empty(n, dtype=np.uint64)
    s = state
    for i in range(n):
        s = s + GOLDEN_GAMMA
        z = s
        z = (z ^ (z >> _S30)) * _MIX1
        z = (z ^ (z >> _S27)) * _MIX2
        out[i] = z ^ (z >> _S31)
    return out, s


def splitmix64_fill(state, n):
    return _splitmix64_fill(np.uint64(state), n)


@njit(cache=True)
def gfsr_fill(history, n):
    out = np.empty(n, dtype=np.uint64)
    # ring buffer view of the 98-word history, rotated back on exit
    ring = history.copy()
    head = 0
    for i in range(n):
        x = ring[head] ^ ring[(head + GFSR_LONG - GFSR_SHORT) % GFSR_LONG]
        ring[head] = x
        head = (head + 1) % GFSR_LONG
        out[i] = x
    for k in range(GFSR_LONG):
        history[k] = ring[(head + k) % GFSR_LONG]
    return out


@njit(cache=True)
def to_unit(words):
    out = np.empty(words.shape[0], dtype=np.float64)
    for i in range(words.shape[0]):
        out[i] = np.float64(words[i] >> _S11) * _INV_2_53
    return out


@njit(cache=True)
def gaussian_pick(u1, u2, n, sigma_fraction):
    out = np.empty(u1.shape[0], dtype=np.int64)
    centre = (n + 1) / 2.0
    spread = sigma_fraction * centre
    for i in range(u1.shape[0]):
        z = math.sqrt(-2.0 * math.log1p(-u1[i])) * math.cos(_TWO_PI * u2[i])
        pos = math.floor(centre + spread * z + 0.5)
        if pos < 1.0:
            pos = 1.0
        elif pos > n:
            pos = float(n)
        out[i] = np.int64(pos) - 1
    return out


@njit(cache=True)
def uniform_pick(u, n):
    out = np.empty(u.shape[0], dtype=np.int64)
    for i in range(u.shape[0]):
        k = np.int64(u[i] * n)
        out[i] = k if k < n else n - 1
    return out


@njit(cache=True)
def bernoulli_retain(u, probability, start):
    kept = np.empty(u.shape[0], dtype=np.int64)
    m = 0
    for i in range(u.shape[0]):
        if u[i] < probability:
            kept[m] = start + i
            m += 1
    return kept[:m].copy()


@njit(cache=True)
def decode_mixed_radix(indices, radices):
    nd = radices.shape[0]
    out = np.empty((indices.shape[0], nd), dtype=np.int64)
    for i in range(indices.shape[0]):
        rest = indices[i]
        for d in range(nd - 1, -1, -1):
            out[i, d] = rest % radices[d]
            rest //= radices[d]
    return out


@njit(cache=True)
def cents(u, scale):
    out = np.empty(u.shape[0], dtype=np.float64)
    for i in range(u.shape[0]):
        out[i] = math.floor(u[i] * (scale * 100.0)) / 100.0
    return out
