"""Deterministic per-purpose random streams.

Every stochastic ingredient of a run (graph wiring, understanding weights,
confidence draws, group assignment) pulls from its own generator, derived by
hashing the master seed together with a purpose tag. Changing one ingredient's
consumption pattern therefore never perturbs the others.
"""

import hashlib

import numpy as np


def substream(seed: int, tag: str) -> np.random.Generator:
    """Return the generator for one named draw purpose.

    The (seed, tag) pair is mixed through a fixed 64-bit hash, so streams are
    reproducible across processes and independent across tags.
    """
    key = f"{seed & 0xFFFFFFFFFFFFFFFF}/{tag}".encode("utf-8")
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return np.random.default_rng(int.from_bytes(digest, "little"))
