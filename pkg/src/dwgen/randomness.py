"""Seeded random stream, string referential, and the name/value factories.

Every random decision in the generator goes through one ``RandomStream``.
Draws are consumed in a fixed, documented order, so a seed fully determines
parameters, data, and workload.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._referential import WORDS

DEFAULT_SEED = 20040101
DEFAULT_SIGMA_FRACTION = 0.2
GENERATORS = ("splitmix64", "gfsr")
WORD_LENGTH = 20

_BLOCK = 512
_INV_2_53 = 1.0 / 9007199254740992.0
_GFSR_WARMUP = 10 * kernels.GFSR_LONG


class RandomStream:
    """Single-owner stream of uniform and Gaussian draws.

    ``splitmix64`` (default) has a 64-bit state and period 2**64.  ``gfsr`` is
    the Lewis-Payne generalized feedback shift register ``x[k] = x[k-98] ^
    x[k-27]`` over 64-bit words, seeded from SplitMix64 and warmed up for 980
    draws.

    ``sigma_fraction`` sets the standard deviation of mean-form draws as a
    fraction of the mean.
    """

    def __init__(self, seed: int = DEFAULT_SEED, generator: str = "splitmix64",
                 sigma_fraction: float = DEFAULT_SIGMA_FRACTION):
        if generator not in GENERATORS:
            raise ValueError(f"unknown generator {generator!r}; expected one of {GENERATORS}")
        if sigma_fraction < 0:
            raise ValueError("sigma_fraction must be >= 0")
        self.seed = int(seed)
        self.generator = generator
        self.sigma_fraction = float(sigma_fraction)
        self.drawn = 0
        self._state = np.uint64(self.seed & 0xFFFFFFFFFFFFFFFF)
        self._history = None
        if generator == "gfsr":
            self._history, _ = kernels.splitmix64_fill(self._state, kernels.GFSR_LONG)
            self._history = np.ascontiguousarray(self._history)
            kernels.gfsr_fill(self._history, _GFSR_WARMUP)
        self._buf = np.empty(0, dtype=np.uint64)
        self._pos = 0

    def _produce(self, n: int) -> np.ndarray:
        if self._history is not None:
            return kernels.gfsr_fill(self._history, n)
        out, self._state = kernels.splitmix64_fill(self._state, n)
        return out

    def u64s(self, n: int) -> np.ndarray:
        """Next ``n`` raw 64-bit words."""
        n = int(n)
        if n < 0:
            raise ValueError("n must be >= 0")
        avail = len(self._buf) - self._pos
        if n <= avail:
            out = self._buf[self._pos:self._pos + n].copy()
            self._pos += n
        else:
            head = self._buf[self._pos:]
            out = np.concatenate([head, self._produce(n - avail)])
            self._buf = np.empty(0, dtype=np.uint64)
            self._pos = 0
        self.drawn += n
        return out

    def next_u64(self) -> int:
        if self._pos >= len(self._buf):
            self._buf = self._produce(_BLOCK)
            self._pos = 0
        word = int(self._buf[self._pos])
        self._pos += 1
        self.drawn += 1
        return word

    def uniform(self) -> float:
        """One draw on [0, 1)."""
        return (self.next_u64() >> 11) * _INV_2_53

    def uniforms(self, n: int) -> np.ndarray:
        return kernels.to_unit(self.u64s(n))

    def normal(self) -> float:
        # Box-Muller, cosine branch only: exactly two uniforms per variate
        u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log1p(-u1)) * math.cos(2.0 * math.pi * u2)

    def gaussian(self, mean: float, sd: float) -> float:
        return mean + sd * self.normal()

    def describe(self) -> dict:
        return {"generator": self.generator, "seed": self.seed,
                "sigma_fraction": self.sigma_fraction}

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, generator={self.generator!r}, drawn={self.drawn})"


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def random_float(rng: RandomStream, low: float | None = None, high: float | None = None,
                 *, mean: float | None = None) -> float:
    """Uniform on ``[low, high)``, or Gaussian around ``mean``.

    The Gaussian form uses ``sd = rng.sigma_fraction * |mean|``.
    """
    if mean is not None:
        if low is not None or high is not None:
            raise ValueError("give either an interval or a mean, not both")
        if not math.isfinite(mean):
            raise ValueError("mean must be finite")
        return rng.gaussian(mean, rng.sigma_fraction * abs(mean))
    if low is None or high is None:
        raise ValueError("interval form needs both bounds")
    if not low < high:
        raise ValueError(f"empty interval [{low}, {high})")
    return low + (high - low) * rng.uniform()


def random_int(rng: RandomStream, low: int | None = None, high: int | None = None,
               *, mean: float | None = None, minimum: int | None = None) -> int:
    """Uniform integer on ``[low, high]`` (inclusive), or a rounded Gaussian.

    Rounding is half-up.  ``minimum`` clamps the result from below, which is
    how counts are kept >= 1.
    """
    if mean is not None:
        value = round_half_up(random_float(rng, mean=mean))
    else:
        if low is None or high is None:
            raise ValueError("interval form needs both bounds")
        if low > high:
            raise ValueError(f"empty interval [{low}, {high}]")
        span = high - low + 1
        value = low + min(int(rng.uniform() * span), span - 1)
    if minimum is not None and value < minimum:
        value = minimum
    return value


def gaussian_index(rng: RandomStream, n: int) -> int:
    """0-based index drawn from a Gaussian centred on the middle of ``n`` slots.

    Position ``clamp(round_half_up(g), 1, n)`` with ``g ~ N(c, sigma_fraction*c)``
    and ``c = (n + 1) / 2``.
    """
    if n < 1:
        raise ValueError("cannot pick from an empty sequence")
    centre = (n + 1) / 2.0
    pos = round_half_up(rng.gaussian(centre, rng.sigma_fraction * centre))
    return min(max(pos, 1), n) - 1


class KeySequence:
    """Sequential integer primary keys for one table: 1, 2, 3, ..."""

    def __init__(self):
        self.last = 0

    def __call__(self) -> int:
        self.last += 1
        return self.last

    def take(self, n: int) -> np.ndarray:
        keys = np.arange(self.last + 1, self.last + n + 1, dtype=np.int64)
        self.last += n
        return keys


integer_primary_key = KeySequence


@dataclass(frozen=True)
class StringReferential:
    pool: tuple = WORDS

    def __post_init__(self):
        if not self.pool:
            raise ValueError("referential pool is empty")

    def __len__(self):
        return len(self.pool)

    def pick(self, rng: RandomStream) -> int:
        return min(int(rng.uniform() * len(self.pool)), len(self.pool) - 1)

    def picks(self, rng: RandomStream, n: int) -> np.ndarray:
        return kernels.uniform_pick(rng.uniforms(n), len(self.pool))

    def value(self, attribute: str, index: int) -> str:
        return f"{attribute}_{self.pool[index]}"


DEFAULT_REFERENTIAL = StringReferential()


def build_pool(size: int = 256, seed: int = 0x5EED) -> tuple:
    """Rebuild the embedded word pool from its generating procedure."""
    state = np.uint64(seed)
    words: list[str] = []
    while len(words) < size:
        raw, state = kernels.splitmix64_fill(state, WORD_LENGTH)
        letters = kernels.uniform_pick(kernels.to_unit(raw), 26)
        word = "".join(chr(97 + int(c)) for c in letters)
        if word not in words:
            words.append(word)
    return tuple(words)


def random_string(rng: RandomStream, attribute: str,
                  referential: StringReferential = DEFAULT_REFERENTIAL) -> str:
    return referential.value(attribute, referential.pick(rng))


def random_key(rng: RandomStream, target):
    """Primary-key value of a Gaussian-chosen tuple of ``target``."""
    keys = target.keys
    if len(keys) == 0:
        raise ValueError(f"cannot draw a key from empty relation {target.name}")
    return int(keys[gaussian_index(rng, len(keys))])


def level_table_name(dimension: int, level: int) -> str:
    return f"DIM{dimension}_{level}"


def fact_table_name(fact: int) -> str:
    return f"FT{fact}"


def primary_key_name(table: str) -> str:
    return f"{table}_PK"


def string_descriptor_name(table: str, i: int) -> str:
    return f"{table}_DESCR{i}"


def float_measure_name(table: str, i: int) -> str:
    return f"{table}_MEAS{i}"
