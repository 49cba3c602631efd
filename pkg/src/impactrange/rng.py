"""Deterministic random-number substreams.

Every stochastic routine in the package draws from a counter-based Philox
generator keyed by (seed, domain, a, b). Substreams are independent of
execution order and worker count, so analyses are reproducible under any
parallel schedule. Normal variates use the inverse-CDF method applied to
open-interval uniforms, one pinned scheme for every platform.
"""

import numpy as np
from scipy.special import ndtri

# Domain tags keep streams from different subsystems disjoint even when the
# same master seed is reused.
ENGINE_STREAM = 1
FOREST_STREAM = 2
SYNTH_STREAM = 3

_PATH_BITS = 30
_PATH_MASK = (1 << _PATH_BITS) - 1
_SEED_MASK = (1 << 64) - 1


def substream(seed, domain, a=0, b=0):
    """Generator for the (seed, domain, a, b) substream.

    `a` and `b` are small path components (repeat index, predictor index,
    tree index, ...) below 2**30 each.
    """
    if not 0 <= a <= _PATH_MASK or not 0 <= b <= _PATH_MASK:
        raise ValueError("substream path component out of range")
    key = np.array(
        [seed & _SEED_MASK, (domain << (2 * _PATH_BITS)) | (a << _PATH_BITS) | b],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def open_uniform(gen, size=None):
    """Uniform draws strictly inside (0, 1) at 53-bit resolution."""
    bits = gen.integers(0, 1 << 53, size=size, dtype=np.int64)
    return (bits + 0.5) * 2.0**-53


def normal(gen, mean, sd, size=None):
    """Normal draws via the inverse CDF of open-interval uniforms."""
    return mean + sd * ndtri(open_uniform(gen, size))


def uniform(gen, low, high, size=None):
    """Uniform draws on the open interval (low, high)."""
    return low + (high - low) * open_uniform(gen, size)
