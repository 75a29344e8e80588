"""Darboux canonicalization, quadratic Hamiltonians and normal-mode spectra.

A Darboux map ``T`` sends a quadruple ``eta`` with commutator matrix
``omega`` to ``zeta = T eta`` with ``T omega T^T = hbar J``. Everything here
is exact except :func:`williamson_frequencies`, which calls a dense
floating-point eigensolver.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

import numpy as np

from . import linalg
from .errors import (
    DegenerateLabel,
    DegenerateOmega,
    DimensionMismatch,
    LengthMismatch,
    NotPositiveDefinite,
    NotSymmetric,
    UnsupportedDimension,
    ZeroHbar,
)
from .group import EquivalenceStatus, decide_equivalence
from .sector import (
    CommutatorMatrix,
    RealizationMatrix,
    SectorLabel,
    conjugation_compatible,
    omega_nc,
    pfaffian,
    standard_j,
)

SPECTRUM_TOL = 1e-9


@dataclass(frozen=True)
class DarbouxMap:
    omega: CommutatorMatrix
    hbar: Fraction
    matrix: RealizationMatrix

    def to_dict(self):
        return {"omega": self.omega.to_list(), "hbar": str(self.hbar), "matrix": self.matrix.to_list()}


@dataclass(frozen=True)
class QuadraticForm:
    """Coefficient matrix ``M`` of ``H = 1/2 eta^T M eta``."""

    entries: linalg.Mat

    def __post_init__(self):
        m = linalg.as_mat(self.entries)
        if not m or len(m) % 2:
            raise UnsupportedDimension(f"quadratic form needs even positive dimension, got {len(m)}")
        if not linalg.is_symmetric(m):
            raise NotSymmetric("quadratic form must be symmetric")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, dim: int = 4) -> "QuadraticForm":
        return cls(linalg.identity(dim))

    def is_positive_definite(self) -> bool:
        return all(m > 0 for m in linalg.leading_minors(self.entries))

    def to_list(self):
        return [[str(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class SpectrumResult:
    frequencies: tuple
    tolerance: float = SPECTRUM_TOL

    def to_dict(self):
        return {"frequencies": [float(w) for w in self.frequencies], "tolerance": self.tolerance}


@dataclass(frozen=True)
class ReductionVerdict:
    darboux_exists: bool
    conjugation_possible: bool
    sectors_equivalent: bool
    narrative: str

    def to_dict(self):
        return {
            "darboux_exists": self.darboux_exists,
            "conjugation_possible": self.conjugation_possible,
            "sectors_equivalent": self.sectors_equivalent,
            "narrative": self.narrative,
        }


def _omega_form(omega: linalg.Mat, u, v) -> Fraction:
    return sum((ui * row[j] * v[j] for ui, row in zip(u, omega) if ui for j in range(len(v)) if v[j]), Fraction(0))


def canonicalize(omega: CommutatorMatrix, hbar) -> DarbouxMap:
    """Symplectic Gram-Schmidt over exact rationals.

    Pivot rule: take the lowest-index remaining vector ``u`` and the
    lowest-index remaining ``v`` with ``omega(u, v) != 0``; rescale ``v`` so
    that ``omega(u, v) = hbar``; project both out of the rest. Already
    canonical input is returned unchanged (identity map).
    """
    hbar = Fraction(hbar)
    if hbar == 0:
        raise ZeroHbar("target hbar must be nonzero")
    if pfaffian(omega) == 0:
        raise DegenerateOmega("omega is degenerate (pfaffian = 0)")
    n = omega.dim
    w = omega.entries
    pool = [list(row) for row in linalg.identity(n)]
    us, vs = [], []
    while pool:
        u = pool.pop(0)
        k = next(i for i, v in enumerate(pool) if _omega_form(w, u, v) != 0)
        v = pool.pop(k)
        c = _omega_form(w, u, v)
        if c != hbar:
            v = [x * hbar / c for x in v]
        new_pool = []
        for x in pool:
            a = _omega_form(w, x, v) / hbar
            b = _omega_form(w, x, u) / hbar
            if a or b:
                x = [xi - a * ui + b * vi for xi, ui, vi in zip(x, u, v)]
            new_pool.append(x)
        pool = new_pool
        us.append(u)
        vs.append(v)
    return DarbouxMap(omega, hbar, RealizationMatrix(us + vs))


def intrinsic_canonicalization(label: SectorLabel) -> DarbouxMap:
    """The explicit label-dependent map
    ``x' = X, y' = Y - (theta/hbar) Pi_x, p_x' = (hbar/kappa)(Pi_x - b_in Y),
    p_y' = (hbar/kappa) Pi_y``.
    """
    h, t, b = label.hbar, label.theta, label.b_in
    if h == 0 or label.kappa == 0:
        raise DegenerateLabel(f"label {label} is off the regular stratum")
    c = h / label.kappa
    rows = (
        (1, 0, 0, 0),
        (0, 1, -t / h, 0),
        (0, -c * b, c, 0),
        (0, 0, 0, c),
    )
    return DarbouxMap(omega_nc(label), h, RealizationMatrix(rows))


def is_darboux_map(t: RealizationMatrix, omega: CommutatorMatrix, hbar) -> bool:
    if t.dim != omega.dim:
        raise DimensionMismatch(f"map is {t.dim}-dimensional, omega is {omega.dim}-dimensional")
    target = linalg.scale(hbar, standard_j(omega.dim // 2))
    return linalg.congruence(t.entries, omega.entries) == target


def _matrix_of(t: Union[DarbouxMap, RealizationMatrix]) -> RealizationMatrix:
    return t.matrix if isinstance(t, DarbouxMap) else t


def transform_quadratic(m: QuadraticForm, t: Union[DarbouxMap, RealizationMatrix]) -> QuadraticForm:
    """Coefficients in the new frame: ``M' = T^{-T} M T^{-1}``."""
    t = _matrix_of(t)
    if t.dim != m.dim:
        raise DimensionMismatch(f"map is {t.dim}-dimensional, form is {m.dim}-dimensional")
    tinv = linalg.inverse(t.entries)
    return QuadraticForm(linalg.matmul(linalg.matmul(linalg.transpose(tinv), m.entries), tinv))


def williamson_frequencies(m: QuadraticForm, omega: CommutatorMatrix) -> SpectrumResult:
    if m.dim != omega.dim:
        raise DimensionMismatch(f"form is {m.dim}-dimensional, omega is {omega.dim}-dimensional")
    if not m.is_positive_definite():
        raise NotPositiveDefinite("Hamiltonian coefficient matrix is not positive definite")
    if pfaffian(omega) == 0:
        raise DegenerateOmega("omega is degenerate (pfaffian = 0)")
    a = linalg.to_float(linalg.matmul(omega.entries, m.entries))
    eig = np.linalg.eigvals(a)
    scale = max(1.0, float(np.max(np.abs(eig))))
    if np.max(np.abs(eig.real)) > SPECTRUM_TOL * scale:
        raise ArithmeticError("eigenvalues of omega @ M are not purely imaginary")
    im = np.sort(eig.imag)
    n = len(im) // 2
    neg, pos = -im[:n][::-1], im[n:]
    if np.max(np.abs(neg - pos)) > SPECTRUM_TOL * scale:
        raise ArithmeticError("eigenvalues of omega @ M do not pair as +-i omega")
    freqs = tuple(float(w) for w in sorted(0.5 * (neg + pos)))
    return SpectrumResult(freqs, SPECTRUM_TOL)


def quadratic_spectrum(freqs: SpectrumResult, quanta: Sequence[int]) -> float:
    """Energy ``sum_k omega_k (n_k + 1/2)``; hbar already sits inside omega."""
    if len(quanta) != len(freqs.frequencies):
        raise LengthMismatch(f"{len(quanta)} quanta for {len(freqs.frequencies)} modes")
    if any(int(n) != n or n < 0 for n in quanta):
        raise ValueError("quanta must be non-negative integers")
    return float(sum(w * (n + 0.5) for w, n in zip(freqs.frequencies, quanta)))


def reduction_verdict(label: SectorLabel) -> ReductionVerdict:
    if label.hbar == 0:
        raise ZeroHbar("verdict needs hbar != 0")
    quotient = label.quotient_partner()
    darboux = label.kappa != 0
    conj = conjugation_compatible(omega_nc(label), omega_nc(quotient))
    verdict = decide_equivalence(label, quotient)
    equivalent = verdict.status is EquivalenceStatus.EQUIVALENT
    lines: List[str] = []
    if darboux:
        lines.append(
            f"A Darboux map to {label.hbar}*J exists (kappa = {label.kappa} != 0), "
            "so a CCR quadruple can be built by linear recombination."
        )
    else:
        lines.append("kappa = 0: the commutator matrix is degenerate and no Darboux map exists.")
    if conj:
        lines.append("The commutator matrices agree with the quotient sector, so conjugation is not obstructed.")
    else:
        lines.append(
            "The commutator matrices differ from those of the quotient sector "
            f"({quotient.hbar}, 0, 0); no componentwise unitary conjugation can relate the quadruples."
        )
    lines.append(f"Sector comparison: {verdict.status.value} ({verdict.reason}).")
    return ReductionVerdict(darboux, conj, equivalent, " ".join(lines))
