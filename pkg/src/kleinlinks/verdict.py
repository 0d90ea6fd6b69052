"""Fiberedness decision engine.

Fibered is never guessed: it is only ever granted by one of the two
structure theorems (connected real arrangement, or the Hopf-core chain),
each stamped with its certificate tag.  Algebraic obstructions from the
Alexander polynomial can only refute; with no certificate and no
obstruction the verdict stays Unknown.
"""

from __future__ import annotations

from .alexander import LaurentPoly, fibered_obstructions
from .lines import RealArrangement, connected_components

__all__ = ["Verdict", "verdict", "FIBERED", "NOT_FIBERED", "UNKNOWN"]

FIBERED = "Fibered"
NOT_FIBERED = "NotFibered"
UNKNOWN = "Unknown"

_THEOREM_CERTS = frozenset({"TheoremB-connected", "TheoremA-HopfCase"})
_REFUTING_CERTS = frozenset(
    {"NonMonicAlexander", "ZeroAlexander-Split", "TheoremA-NonHopfCase"}
)
_CERTS = _THEOREM_CERTS | _REFUTING_CERTS | {"None"}


class Verdict:
    """A fiberedness status together with the evidence that produced it."""

    __slots__ = ("status", "certificate", "obstructions")

    def __init__(self, status, certificate="None", obstructions=()):
        if status not in (FIBERED, NOT_FIBERED, UNKNOWN):
            raise ValueError(f"unknown status {status!r}")
        if certificate not in _CERTS:
            raise ValueError(f"unknown certificate {certificate!r}")
        if status == FIBERED and certificate not in _THEOREM_CERTS:
            raise ValueError("Fibered requires a theorem certificate")
        if status == NOT_FIBERED and certificate not in _REFUTING_CERTS and not obstructions:
            raise ValueError("NotFibered requires an obstruction or certificate")
        if status == UNKNOWN and certificate != "None":
            raise ValueError("Unknown carries no certificate")
        self.status = status
        self.certificate = certificate
        self.obstructions = tuple(obstructions)

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return (
            self.status == other.status
            and self.certificate == other.certificate
            and self.obstructions == other.obstructions
        )

    def __hash__(self):
        return hash((self.status, self.certificate, self.obstructions))

    def __repr__(self):
        extra = f", obstructions={list(self.obstructions)}" if self.obstructions else ""
        return f"Verdict({self.status}, {self.certificate}{extra})"


def verdict(source: str, data) -> Verdict:
    """Decide fiberedness for one of the three evidence sources.

    Args:
        source: "arrangement" (data: RealArrangement), "chain" (data: the
            pair (core_label, framing)), or "diagram" (data: the pair
            (delta, seifert_rank)).

    The arrangement route applies the connectivity theorem exactly; the
    chain route recognizes the unique fibered chain (unknot core, framing
    -1) and refutes every other one, additionally recording the non-monic
    Alexander obstruction when |framing| != 1; the diagram route can only
    refute or abstain.
    """
    if source == "arrangement":
        arr: RealArrangement = data
        if len(connected_components(arr)) == 1:
            return Verdict(FIBERED, "TheoremB-connected")
        return Verdict(NOT_FIBERED, "ZeroAlexander-Split", ("ZeroAlexander",))
    if source == "chain":
        label, t = data
        if label == "O" and t == -1:
            return Verdict(FIBERED, "TheoremA-HopfCase")
        obs = ("NonMonicAlexander",) if abs(int(t)) != 1 else ()
        return Verdict(NOT_FIBERED, "TheoremA-NonHopfCase", obs)
    if source == "diagram":
        delta, rank = data
        if not isinstance(delta, LaurentPoly):
            delta = LaurentPoly(delta)
        obs = fibered_obstructions(delta, rank)
        if not obs:
            return Verdict(UNKNOWN)
        if "NonMonic" in obs:
            return Verdict(NOT_FIBERED, "NonMonicAlexander", tuple(obs))
        if "ZeroAlexander" in obs:
            return Verdict(NOT_FIBERED, "ZeroAlexander-Split", tuple(obs))
        return Verdict(NOT_FIBERED, "None", tuple(obs))
    raise ValueError(f"unknown verdict source {source!r}")
