"""Seeded random-number streams.

Every randomized component draws from its own PCG64 stream derived from a
single integer run seed.  Streams are named, so adding a new consumer never
shifts the draws of an existing one:

    stream(seed, "env")         # episode resets and target switches
    stream(seed, "agent")       # policy sampling during training
    stream(seed, "net-init")    # network weight initialization
    stream(seed, "warmup")      # uniform random warmup actions
    stream(seed, "buffer")      # replay minibatch indices
    stream(seed, "eval")        # evaluation episode draws
    stream(seed, "cmaes")       # CMA-ES population sampling
    stream(seed, "calibration") # calibration posture sampling

The derivation hashes the name into the PCG64 seed material via
``numpy.random.SeedSequence(seed, name_digest)``, which is stable across
platforms and numpy versions.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _name_key(name: str) -> int:
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def stream(seed: int, name: str) -> np.random.Generator:
    """Return the named PCG64 stream for a run seed."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(_name_key(name),))
    return np.random.Generator(np.random.PCG64(ss))
