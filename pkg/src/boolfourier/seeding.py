"""Deterministic per-trial seed derivation.

Trials of a Monte Carlo run get independent RNG streams derived from the
master seed and the trial index by hashing the pair, so results do not
depend on scheduling order and any single trial can be reproduced alone.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(master: int, trial: int) -> int:
    """Mix (master, trial) into a 64-bit seed via blake2b."""
    payload = f"{master}:{trial}".encode()
    digest = hashlib.blake2b(payload, digest_size=8).digest()
    return int.from_bytes(digest, "little")


def trial_rng(master: int, trial: int) -> random.Random:
    return random.Random(derive_seed(master, trial))
