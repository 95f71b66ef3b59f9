"""Seeded random node sets for randomized trials.

Every trial draws from its own ``numpy.random.Generator`` seeded with
``(master_seed, trial_index)``, so a trial can be replayed on its own and
results do not depend on the order trials run in.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import Field, PrimeField, PrimeFieldElement
from .identities import NodeSet


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def random_int_below(rng: np.random.Generator, bound: int) -> int:
    """Integer in ``[0, bound)``; works for moduli wider than 64 bits."""
    nbytes = (bound.bit_length() + 7) // 8 + 8
    return int.from_bytes(rng.bytes(nbytes), "little") % bound


def random_element(rng: np.random.Generator, field: Field):
    if isinstance(field, PrimeField):
        return PrimeFieldElement(random_int_below(rng, field.p), field.p)
    if field.exact:
        return Fraction(int(rng.integers(-60, 61)), int(rng.integers(1, 13)))
    return float(rng.uniform(-2.0, 2.0))


def random_nodeset(rng: np.random.Generator, n: int, field: Field) -> NodeSet:
    """``n`` distinct random nodes, resampling any value that repeats."""
    if isinstance(field, PrimeField) and field.p <= n:
        raise ValueError(f"F_{field.p} has fewer than {n} distinct elements")
    nodes, seen = [], set()
    while len(nodes) < n:
        x = random_element(rng, field)
        if x in seen:
            continue
        seen.add(x)
        nodes.append(x)
    return NodeSet(nodes, field)
