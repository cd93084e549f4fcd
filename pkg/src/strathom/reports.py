"""Report types and their stable JSON shapes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import LaurentPoly


@dataclass(frozen=True)
class DegreeGroup:
    rank: int
    torsion: Tuple = ()


def _torsion_json(x):
    if isinstance(x, LaurentPoly):
        return [str(c) for c in x.coefficient_list()]
    return int(x)


@dataclass
class HomologyReport:
    """Per-degree free rank and torsion invariant factors."""

    degrees: Dict[int, DegreeGroup] = field(default_factory=dict)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(self.degrees[i].rank for i in sorted(self.degrees))

    def torsion(self, i: int) -> Tuple:
        return self.degrees[i].torsion if i in self.degrees else ()

    def has_torsion(self) -> bool:
        return any(g.torsion for g in self.degrees.values())

    def euler(self) -> int:
        return sum((-1) ** i * g.rank for i, g in self.degrees.items())

    def is_zero(self) -> bool:
        return all(g.rank == 0 and not g.torsion for g in self.degrees.values())

    def as_dict(self) -> dict:
        return {str(i): {"rank": g.rank, "torsion": [_torsion_json(x) for x in g.torsion]}
                for i, g in sorted(self.degrees.items())}

    def __str__(self):
        parts = []
        for i, g in sorted(self.degrees.items()):
            tor = "".join(f" + tor({x})" for x in g.torsion)
            parts.append(f"H{i} = {g.rank}{tor}")
        return ", ".join(parts)


class TwistedIHReport(HomologyReport):
    """Ranks are over Q(t); torsion factors are normalized Laurent polynomials."""


@dataclass
class EulerReport:
    ichi: int
    chi: int
    n: Optional[int]
    ichi_chain: int
    chi_chain: int

    @property
    def signed_ih(self) -> Optional[bool]:
        if self.n is None:
            return None
        return (-1) ** self.n * self.ichi >= 0

    @property
    def signed_lci(self) -> Optional[bool]:
        if self.n is None:
            return None
        return (-1) ** self.n * self.chi >= 0

    def as_dict(self) -> dict:
        return {"ichi": self.ichi, "chi": self.chi, "n": self.n,
                "signed_ih": self.signed_ih, "signed_lci": self.signed_lci}


@dataclass
class WitnessPart:
    """One half of a witness: intersection homology or ordinary homology."""

    kind: str
    twisted_ranks: Tuple[int, ...]
    euler: int
    applicable: bool
    offending_degrees: Tuple[int, ...] = ()
    rank_n: Optional[int] = None

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "twisted_ranks": list(self.twisted_ranks), "euler": self.euler,
             "status": "witness" if self.applicable else "inapplicable"}
        if self.applicable:
            d["rank_n"] = self.rank_n
        else:
            d["offending_degrees"] = list(self.offending_degrees)
        return d


@dataclass
class WitnessReport:
    n: int
    ih: WitnessPart
    ordinary: WitnessPart

    @property
    def applicable(self) -> bool:
        return self.ih.applicable

    def as_dict(self) -> dict:
        return {"n": self.n, "ih": self.ih.as_dict(), "ordinary": self.ordinary.as_dict()}


def laurent_from_json(coeffs: List[str]) -> LaurentPoly:
    return LaurentPoly.from_coefficients([Fraction(c) for c in coeffs])
