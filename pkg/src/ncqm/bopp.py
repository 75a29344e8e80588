"""Generalized Bopp-shift family ``S(r, s)``.

``S(r, s)`` expresses an NCQM quadruple as a linear recombination of a CCR
quadruple, ``eta_{r,s} = S(r, s) @ xi``, without leaving the sector.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateLabel, InadmissibleParams, LabelMismatch, ZeroHbar
from .sector import (
    RealizationMatrix,
    SectorLabel,
    omega_ccr,
    omega_nc,
    push_commutators,
)


@dataclass(frozen=True)
class BoppParams:
    r: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    def is_admissible(self, label: SectorLabel) -> bool:
        return label.hbar - self.r * label.theta * label.b_in != 0


@dataclass(frozen=True)
class BoppRealization:
    label: SectorLabel
    params: BoppParams
    matrix: RealizationMatrix

    def to_dict(self):
        return {
            "label": self.label.to_dict(),
            "r": str(self.params.r),
            "s": str(self.params.s),
            "matrix": self.matrix.to_list(),
        }


def a_coefficient(label: SectorLabel, r) -> Fraction:
    r = Fraction(r)
    h, t, b = label.hbar, label.theta, label.b_in
    den = h - r * t * b
    if den == 0:
        raise InadmissibleParams(f"r = {r} hits the excluded value hbar/(theta*b_in)")
    return (1 - r) * h * b / den


def bopp_matrix(label: SectorLabel, params: BoppParams) -> BoppRealization:
    h, t, b = label.hbar, label.theta, label.b_in
    r, s = params.r, params.s
    if h == 0:
        raise ZeroHbar("the Bopp family needs hbar != 0")
    a = a_coefficient(label, r)
    if label.kappa == 0:
        raise DegenerateLabel("hbar - theta*b_in = 0: S(r, s) would be singular")
    th = t / h
    rows = (
        (1, 0, 0, -s * th),
        (0, 1, (1 - s) * th, 0),
        (0, a, 1 - a * s * th, 0),
        (-r * b, 0, 0, 1 - r * b * (1 - s) * th),
    )
    return BoppRealization(label, params, RealizationMatrix(rows))


def verify_sector_invariance(realization: BoppRealization) -> bool:
    """True iff ``S (hbar J) S^T`` reproduces the sector's commutator matrix."""
    label = realization.label
    pushed = push_commutators(realization.matrix, omega_ccr(label.hbar, 2))
    return pushed == omega_nc(label)


def realization_transfer(source: BoppRealization, to_params: BoppParams) -> RealizationMatrix:
    """Return ``G = S(r', s') S(r, s)^{-1}`` so that ``eta_{r',s'} = G eta_{r,s}``."""
    if not source.params.is_admissible(source.label):
        raise InadmissibleParams(f"source params {source.params} inadmissible")
    target = bopp_matrix(source.label, to_params)
    if target.label != source.label:
        raise LabelMismatch("realizations belong to different sectors")
    return target.matrix @ source.matrix.inverse()
