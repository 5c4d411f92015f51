"""Pure-numpy kernels. Bit-for-bit twins of ``numba_impl``."""
import numpy as np

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO_PI = 2.0 * np.pi
_INV_2_53 = 1.0 / 9007199254740992.0

GFSR_LONG = 98
GFSR_SHORT = 27


def splitmix64_fill(state, n):
    """Return ``(draws, new_state)`` for the next ``n`` SplitMix64 outputs."""
    state = np.uint64(state)
    with np.errstate(over="ignore"):
        z = state + GOLDEN_GAMMA * np.arange(1, n + 1, dtype=np.uint64)
        new_state = state + GOLDEN_GAMMA * np.uint64(n)
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    z ^= z >> np.uint64(31)
    return z, new_state


def gfsr_fill(history, n):
    """Advance a Lewis-Payne GFSR ``x[k] = x[k-98] ^ x[k-27]``.

    ``history`` holds the last 98 words, oldest first, and is updated in place.
    """
    out = np.empty(n, dtype=np.uint64)
    done = 0
    while done < n:
        step = min(GFSR_SHORT, n - done)
        fresh = history[:step] ^ history[GFSR_LONG - GFSR_SHORT:GFSR_LONG - GFSR_SHORT + step]
        out[done:done + step] = fresh
        history[:-step] = history[step:].copy()
        history[-step:] = fresh
        done += step
    return out


def to_unit(words):
    """Map 64-bit words onto doubles in [0, 1) using the top 53 bits."""
    return (words >> np.uint64(11)).astype(np.float64) * _INV_2_53


def gaussian_pick(u1, u2, n, sigma_fraction):
    """0-based indices of a Gaussian pick over ``n`` slots centred on the middle.

    One Box-Muller normal per (u1, u2) pair; the 1-based position is
    ``clamp(floor(c + s*z + 0.5), 1, n)`` with ``c = (n+1)/2`` and ``s = sigma_fraction*c``.
    """
    centre = (n + 1) / 2.0
    z = np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(_TWO_PI * u2)
    pos = np.floor(centre + sigma_fraction * centre * z + 0.5)
    return (np.clip(pos, 1, n) - 1).astype(np.int64)


def uniform_pick(u, n):
    return np.minimum((u * n).astype(np.int64), n - 1)


def bernoulli_retain(u, probability, start):
    """Global combination indices ``start + i`` for which ``u[i] < probability``."""
    return np.flatnonzero(u < probability).astype(np.int64) + np.int64(start)


def decode_mixed_radix(indices, radices):
    """Split flat indices into per-dimension digits, last dimension fastest."""
    out = np.empty((indices.shape[0], radices.shape[0]), dtype=np.int64)
    rest = indices.copy()
    for d in range(radices.shape[0] - 1, -1, -1):
        out[:, d] = rest % radices[d]
        rest //= radices[d]
    return out


def cents(u, scale):
    """Uniform values on [0, scale) floored to two decimals."""
    return np.floor(u * (scale * 100.0)) / 100.0
