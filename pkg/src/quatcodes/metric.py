"""Quaternion-Mannheim (Lipschitz) weight and distance on residue classes.

The weight of a class is the minimum of |a0|+|a1|+|a2|+|a3| over all of its
representatives; the distance between two classes is the weight of their
difference.  No closed form is known for the minimizing representative, so
it is found by exhaustive search: every representative rep0 - b*pi with b in
the box [-B, B]^4 is examined, where

    B = ceil((w0 + p) / p) + 1

and w0 is the absolute component sum of the canonical representative.  The
bound is deliberately generous; its sufficiency is audited by the property
that enlarging it never changes a reported weight.

Weights for a modulus are computed once for all p^2 classes and cached, so
repeated queries are dictionary lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from .quaternion import Components, Quaternion
from .residues import Modulus, Residue


@dataclass(frozen=True)
class WeightedRep:
    """A minimal-weight representative of a residue class.

    Among representatives of equal minimal weight within the search box, the
    lexicographically least component tuple is chosen, so results are
    reproducible across runs and platforms.
    """

    rep: Quaternion
    weight: int


def _shift_grid(modulus: Modulus, bound: int) -> np.ndarray:
    """All products b*pi for b in the box [-bound, bound]^4, as an (N, 4) array."""
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    b = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), axis=-1).reshape(-1, 4)
    p0, p1, p2, p3 = modulus.pi.components
    b0, b1, b2, b3 = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
    return np.stack(
        [
            b0 * p0 - b1 * p1 - b2 * p2 - b3 * p3,
            b0 * p1 + b1 * p0 + b2 * p3 - b3 * p2,
            b0 * p2 - b1 * p3 + b2 * p0 + b3 * p1,
            b0 * p3 + b1 * p2 - b2 * p1 + b3 * p0,
        ],
        axis=1,
    )


def _box_search(rep0: Components, modulus: Modulus, margin: int,
                grids: Dict[int, np.ndarray]) -> Tuple[Components, int]:
    w0 = sum(abs(c) for c in rep0)
    bound = -(-(w0 + modulus.p) // modulus.p) + 1 + margin
    grid = grids.get(bound)
    if grid is None:
        grid = grids[bound] = _shift_grid(modulus, bound)
    cand = np.asarray(rep0, dtype=np.int64)[None, :] - grid
    weights = np.abs(cand).sum(axis=1)
    wmin = int(weights.min())
    best = cand[weights == wmin]
    order = np.lexsort((best[:, 3], best[:, 2], best[:, 1], best[:, 0]))
    chosen = best[order[0]]
    return (int(chosen[0]), int(chosen[1]), int(chosen[2]), int(chosen[3])), wmin


def _weight_table(modulus: Modulus) -> Dict[Components, WeightedRep]:
    table = modulus._weight_table
    if table is None:
        grids: Dict[int, np.ndarray] = {}
        table = {}
        for r in modulus.residues:
            comps, w = _box_search(r.key, modulus, 0, grids)
            table[r.key] = WeightedRep(Quaternion.from_components(comps), w)
        modulus._weight_table = table
    return table


def min_weight_rep(x: Residue, margin: int = 0) -> WeightedRep:
    """A minimal-weight representative of x's class.

    `margin` widens the search box beyond the default bound; it exists for
    auditing that the default is already sufficient.
    """
    if margin == 0:
        return _weight_table(x.modulus)[x.key]
    comps, w = _box_search(x.key, x.modulus, margin, {})
    return WeightedRep(Quaternion.from_components(comps), w)


def qm_weight(x: Residue) -> int:
    return _weight_table(x.modulus)[x.key].weight


def qm_distance(x: Residue, y: Residue) -> int:
    """Weight of the class of x - y; symmetric since |-a| = |a|."""
    return qm_weight(x - y)


def vector_qm_weight(word: Sequence[Residue]) -> int:
    """Total weight of an error pattern: sum of per-position class weights."""
    return sum(qm_weight(x) for x in word)


def residues_of_weight(modulus: Modulus, weight: int) -> Tuple[Residue, ...]:
    """All residue classes of exactly the given weight, sorted canonically."""
    table = _weight_table(modulus)
    return tuple(
        r for r in modulus.residues if table[r.key].weight == weight
    )
