"""Deterministic generator for repetitive test corpora."""

from __future__ import annotations

import random


def generate_repetitive(
    base_size: int,
    copies: int,
    mutation_rate: float,
    seed: int,
    sigma: int = 4,
) -> bytes:
    """A random base string followed by ``copies`` mutated copies of it.

    Each copy resamples every symbol independently with probability
    ``mutation_rate``, modelling near-duplicate collections.  Output is a
    pure function of the arguments.
    """
    if base_size < 1:
        raise ValueError("base size must be positive")
    if copies < 0:
        raise ValueError("copy count must be nonnegative")
    if not 0.0 <= mutation_rate <= 1.0:
        raise ValueError("mutation rate must lie in [0, 1]")
    if not 1 <= sigma <= 26:
        raise ValueError("alphabet size must lie in 1..26")
    rng = random.Random(seed)
    alphabet = bytes(range(ord("a"), ord("a") + sigma))
    base = rng.choices(alphabet, k=base_size)
    chunks = [bytes(base)]
    for _ in range(copies):
        chunks.append(
            bytes(
                rng.choice(alphabet) if rng.random() < mutation_rate else b
                for b in base
            )
        )
    return b"".join(chunks)
