"""Seeded random streams.

All randomness flows through numpy's PCG64 bit generator. Batches of paths are
split into fixed-size blocks, and block ``k`` draws from the substream
``SeedSequence(seed, spawn_key=(k,))``. Results therefore depend only on
``(seed, path_index)``, never on worker count or execution order.
"""

from collections.abc import Iterator

import numpy as np

# Paths per substream block.
BLOCK_SIZE = 65_536


def make_rng(seed: int) -> np.random.Generator:
    """Generator for a single seeded stream."""
    return np.random.Generator(np.random.PCG64(seed))


def block_rng(seed: int, block: int) -> np.random.Generator:
    """Generator for substream ``block`` of ``seed``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(block,))
    return np.random.Generator(np.random.PCG64(sequence))


def iter_blocks(paths: int, block_size: int = BLOCK_SIZE) -> Iterator[tuple[int, int]]:
    """Yield ``(block_index, block_length)`` covering ``paths`` paths."""
    block = 0
    start = 0
    while start < paths:
        length = min(block_size, paths - start)
        yield block, length
        block += 1
        start += length
