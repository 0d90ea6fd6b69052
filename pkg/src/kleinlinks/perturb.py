"""Direction-preserving seeded perturbation into general position.

Only the constant term of each line moves (by a seeded rational in
(-eps, eps)), so concurrent pairs cannot become parallel for small eps and
the boundary word is stable.  All postconditions are checked outright and the
schedule retries with halved eps until they hold.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chords import chord_diagram
from .errors import PerturbationFailed, ValidationError
from .lines import (
    RealArrangement,
    RealLine,
    connected_components,
    is_general_position,
    validate_arrangement,
)

__all__ = ["perturb_general"]

_MAX_ATTEMPTS = 48
_GRAIN = 2 ** 31


def perturb_general(arr: RealArrangement, seed: int, eps=Fraction(1, 100)) -> RealArrangement:
    """Return a nearby general-position arrangement with the same boundary
    word, the same component partition and the same pair classes (degree-m
    nodes split into C(m,2) simple ones).  Deterministic in ``seed``.

    An already-generic arrangement is returned unchanged.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if is_general_position(arr):
        return arr

    word0 = chord_diagram(arr)
    comps0 = connected_components(arr)
    rng = random.Random(seed)

    cur_eps = eps
    for attempt in range(_MAX_ATTEMPTS):
        deltas = [
            cur_eps * Fraction(rng.randint(-_GRAIN + 1, _GRAIN - 1), _GRAIN)
            for _ in arr.lines
        ]
        try:
            cand = validate_arrangement(
                [RealLine(ln.a, ln.b, ln.c + d) for ln, d in zip(arr.lines, deltas)]
            )
        except ValidationError:
            cur_eps /= 2
            continue
        if not is_general_position(cand):
            cur_eps /= 2
            continue
        if not _pair_classes_preserved(arr, cand):
            cur_eps /= 2
            continue
        if chord_diagram(cand) != word0:
            cur_eps /= 2
            continue
        if connected_components(cand) != comps0:
            cur_eps /= 2
            continue
        return cand
    raise PerturbationFailed(
        f"no valid perturbation after {_MAX_ATTEMPTS} attempts (seed {seed})"
    )


def _pair_classes_preserved(arr, cand):
    for key, pc in arr.pair_classes.items():
        if pc.tag != cand.pair_classes[key].tag:
            return False
    return True
