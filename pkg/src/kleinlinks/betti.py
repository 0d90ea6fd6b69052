"""First Betti number of the fiber predicted from arrangement combinatorics.

For a connected arrangement the count is

    sum over nodes of (degree - 1)^2  +  number of bounded faces.

Bounded faces of a non-generic arrangement are counted through a
deterministic internal perturbation: blowing a degree-m node up into
C(m,2) simple ones creates exactly C(m-1,2) new faces inside the blown-up
cluster, which are subtracted again.  On general-position input the direct
face count is used unchanged, where the total reduces to 2n - k + 1.
"""

from __future__ import annotations

import math

from .errors import GenericityFailure, NotConnected
from .faces import bounded_faces
from .lines import RealArrangement, connected_components, is_general_position
from .perturb import perturb_general

__all__ = ["expected_betti"]

_PERTURB_SEED = 1729


def expected_betti(arr: RealArrangement) -> int:
    """Predicted rank of the first homology of the fiber surface.

    Raises:
        NotConnected: if the union of the chords is disconnected.
    """
    if len(connected_components(arr)) != 1:
        raise NotConnected("Betti prediction needs a connected arrangement")
    degs = [nd.degree for nd in arr.nodes]
    if is_general_position(arr):
        s = bounded_faces(arr)
    else:
        gen = perturb_general(arr, _PERTURB_SEED)
        if gen.n_nodes != sum(math.comb(d, 2) for d in degs):
            raise GenericityFailure("perturbation altered the incidence structure")
        s = bounded_faces(gen) - sum(math.comb(d - 1, 2) for d in degs)
    return sum((d - 1) ** 2 for d in degs) + s
