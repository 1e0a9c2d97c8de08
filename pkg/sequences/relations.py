import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from core.errors import BchlabError
from core.rings import ZPoly
from sequences.tau import SequenceKind, TauSequence, triangular

logger = logging.getLogger(__name__)

RELATIONS = ("bch", "dbch", "dodgson", "modified-dodgson")


class ConstraintViolated(BchlabError):
    """Custom exception for initial data that break the Phi_0 = 0 constraint"""
    pass


@dataclass
class RelationReport:
    """Per-index exact residuals; every entry must be the zero polynomial"""
    kind: str
    residuals: Dict[int, ZPoly] = field(default_factory=dict)
    con_residuals: Dict[int, ZPoly] = field(default_factory=dict)

    @property
    def failures(self) -> List[int]:
        return sorted(n for n, r in self.residuals.items() if r)

    @property
    def con_failures(self) -> List[int]:
        return sorted(n for n, r in self.con_residuals.items() if r)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.con_failures

    def to_dict(self) -> dict:
        return {
            "relation": self.kind,
            "ok": self.ok,
            "checked": sorted(self.residuals),
            "failures": {str(n): str(self.residuals[n]) for n in self.failures},
            "con_failures": {str(n): str(self.con_residuals[n]) for n in self.con_failures},
        }


def phi(Qa: ZPoly, Qb: ZPoly) -> ZPoly:
    """Phi for the pair (Q_{n-1}, Q_n) = (Qb, Qa)."""
    return Qa.shift(1) * Qb.shift(-1) + Qb.shift(1) * Qa.shift(-1) - (Qb * Qa).scale(2)


def constraint_residuals(seq: TauSequence) -> Dict[int, ZPoly]:
    """Phi_n for every consecutive pair (n-1, n), n = 0..N."""
    return {n: phi(seq[n], seq[n - 1]) for n in range(0, seq.N + 1)}


def to_dodgson_R(seq: TauSequence) -> TauSequence:
    """R_n = 2^{-n(n+1)/2} Q_n; requires Phi_0 = 0 for the initial pair."""
    if phi(seq[0], seq[-1]):
        raise ConstraintViolated(f"Initial data violate Phi_0 = 0: {phi(seq[0], seq[-1])}")
    entries = [seq[n].scale(Fraction(1, 2 ** triangular(n))) if n > 0 else seq[n] for n in seq.indices()]
    return seq.with_entries(entries, kind=SequenceKind.DODGSON_R)


def bilinear_residual(kind: str, prev: ZPoly, cur: ZPoly, nxt: ZPoly) -> ZPoly:
    if kind == "bch":
        return nxt.derive() * prev - nxt * prev.derive() - cur * cur
    if kind == "dbch":
        return nxt.shift(1) * prev - nxt * prev.shift(1) - cur * cur.shift(1)
    if kind == "dodgson":
        return nxt.shift(1) * prev.shift(-1) - nxt.shift(-1) * prev.shift(1) - cur * cur
    if kind == "modified-dodgson":
        return nxt.shift(1) * prev.shift(-1) - nxt.shift(-1) * prev.shift(1) - (cur * cur).scale(2)
    raise ValueError(f"Unknown relation {kind!r}, expected one of {RELATIONS}")


def con_residual(prev: ZPoly, cur: ZPoly, nxt: ZPoly) -> ZPoly:
    """
    Q_{n+1}(z+1)Q_n(z-1)Q_{n-1}(z) - Q_{n+1}(z)Q_n(z-1)Q_{n-1}(z+1)
      - Q_{n+1}(z)Q_n(z+1)Q_{n-1}(z-1) + Q_{n+1}(z-1)Q_n(z+1)Q_{n-1}(z)
    """
    cur_m, cur_p = cur.shift(-1), cur.shift(1)
    lhs = cur_m * (nxt.shift(1) * prev - nxt * prev.shift(1))
    rhs = cur_p * (nxt * prev.shift(-1) - nxt.shift(-1) * prev)
    return lhs - rhs


def verify_relation(kind: str, seq: TauSequence, with_con: bool = True) -> RelationReport:
    """Residuals of the named relation on every consecutive triple (n-1, n, n+1), n = 0..N-1."""
    if kind not in RELATIONS:
        raise ValueError(f"Unknown relation {kind!r}, expected one of {RELATIONS}")
    report = RelationReport(kind)
    for n in range(0, seq.N):
        report.residuals[n] = bilinear_residual(kind, seq[n - 1], seq[n], seq[n + 1])
        if with_con and kind != "bch":
            report.con_residuals[n] = con_residual(seq[n - 1], seq[n], seq[n + 1])
    if report.ok:
        logger.info(f"{kind}: residuals vanish for n = 0..{seq.N - 1}")
    else:
        logger.warning(f"{kind}: nonzero residuals at n = {report.failures}, con at {report.con_failures}")
    return report
