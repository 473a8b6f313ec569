"""Deterministic seed derivation and RNG construction.

All randomness in this package flows through ``random.Random`` (Mersenne
Twister), which produces the same stream for the same seed on every
platform. Substream seeds are derived by hashing a canonical key string
with SHA-256, so derivation is order-independent and stable across
processes: the j-th sample draw or the (group, n, R, replicate) cell of
an experiment always sees the same generator state.
"""

import hashlib
import random

_SEP = "\x1f"


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from an arbitrary key tuple."""
    key = _SEP.join(str(p) for p in parts)
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)
