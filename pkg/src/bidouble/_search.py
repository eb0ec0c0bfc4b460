"""Development helper: seeded random search for small-integer solutions.

Not part of the public API; used to enrich test fixtures.
"""

from __future__ import annotations

import random

from .algebra import Algebra
from .exactlin import Tensor
from .yangbaxter import EQUATIONS, equation_tag, residual


def random_tensor(rng: random.Random, n: int, symmetry: str, values=(-1, 0, 1)) -> Tensor:
    """Random ``n×n`` tensor that is ``symmetric``, ``antisymmetric`` or ``any``."""
    rows = [[rng.choice(values) for _ in range(n)] for _ in range(n)]
    t = Tensor.of(rows)
    if symmetry == "symmetric":
        return t + t.T
    if symmetry == "antisymmetric":
        return t - t.T
    return t


def search(a: Algebra, eq: str, seed: int = 0, trials: int = 500, symmetry: str = "auto",
           values=(-1, 0, 1), nonzero: bool = True) -> list:
    """Distinct solutions found among ``trials`` random grid points (in discovery order)."""
    tag = equation_tag(eq)
    if a.kind != EQUATIONS[tag]:
        raise ValueError(f"{tag} needs a {EQUATIONS[tag]} algebra")
    if symmetry == "auto":
        symmetry = "antisymmetric" if tag in ("AYBE", "CYBE") else "symmetric"
    rng = random.Random(seed)
    found, seen = [], set()
    for _ in range(trials):
        r = random_tensor(rng, a.dim, symmetry, values)
        if (nonzero and r.is_zero()) or r in seen:
            continue
        seen.add(r)
        if residual(tag, a, r).is_zero():
            found.append(r)
    return found
