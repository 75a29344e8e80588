"""Sector labels, commutator matrices and their pushforward.

Basis ordering is fixed: ``(X, Y, Pi_x, Pi_y)`` for NCQM quadruples and
``(x, y, p_x, p_y)`` for CCR quadruples. A commutator matrix ``omega``
encodes ``[eta_a, eta_b] = i * omega[a][b]``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, NotAntisymmetric, SingularMatrix, UnsupportedDimension
from .linalg import Mat

_F = Fraction


def _frac_field(obj, *names):
    for name in names:
        object.__setattr__(obj, name, Fraction(getattr(obj, name)))


@dataclass(frozen=True)
class SectorLabel:
    """The triple ``(hbar, theta, b_in)`` labelling an irreducible sector."""

    hbar: Fraction
    theta: Fraction
    b_in: Fraction

    def __post_init__(self):
        _frac_field(self, "hbar", "theta", "b_in")

    @property
    def kappa(self) -> Fraction:
        return self.hbar - self.theta * self.b_in

    @property
    def is_regular(self) -> bool:
        return self.hbar != 0 and self.kappa != 0

    @property
    def is_quotient_sector(self) -> bool:
        """True for ``(hbar, 0, 0)`` with ``hbar != 0``."""
        return self.hbar != 0 and self.theta == 0 and self.b_in == 0

    @property
    def is_generic(self) -> bool:
        return self.is_regular and self.theta != 0 and self.b_in != 0

    def quotient_partner(self) -> "SectorLabel":
        return SectorLabel(self.hbar, 0, 0)

    def to_dict(self):
        return {"hbar": str(self.hbar), "theta": str(self.theta), "b_in": str(self.b_in)}


@dataclass(frozen=True)
class CentralCharacterVector:
    alpha1: Fraction
    alpha2: Fraction
    alpha3: Fraction

    def __post_init__(self):
        _frac_field(self, "alpha1", "alpha2", "alpha3")

    def as_tuple(self):
        return (self.alpha1, self.alpha2, self.alpha3)

    def to_list(self):
        return [str(a) for a in self.as_tuple()]


@dataclass(frozen=True)
class CommutatorMatrix:
    """Exactly antisymmetric rational matrix of even dimension."""

    entries: Mat = field()

    def __post_init__(self):
        m = linalg.as_mat(self.entries)
        if not m or len(m) % 2:
            raise UnsupportedDimension(f"commutator matrix needs even positive dimension, got {len(m)}")
        if not linalg.is_antisymmetric(m):
            raise NotAntisymmetric("commutator matrix must be antisymmetric")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_list(self):
        return [[str(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class RealizationMatrix:
    """Invertible rational matrix acting on a column of operators."""

    entries: Mat = field()

    def __post_init__(self):
        m = linalg.as_mat(self.entries)
        if not m or len(m) % 2:
            raise UnsupportedDimension(f"realization matrix needs even positive dimension, got {len(m)}")
        if linalg.det(m) == 0:
            raise SingularMatrix("realization matrix must be invertible")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "RealizationMatrix") -> "RealizationMatrix":
        return RealizationMatrix(linalg.matmul(self.entries, other.entries))

    def inverse(self) -> "RealizationMatrix":
        return RealizationMatrix(linalg.inverse(self.entries))

    def det(self) -> Fraction:
        return linalg.det(self.entries)

    @classmethod
    def identity(cls, dim: int = 4) -> "RealizationMatrix":
        return cls(linalg.identity(dim))

    @classmethod
    def diag(cls, values: Sequence) -> "RealizationMatrix":
        return cls(linalg.diag(values))

    def to_list(self):
        return [[str(x) for x in row] for row in self.entries]


def omega_nc(label: SectorLabel) -> CommutatorMatrix:
    h, t, b = label.hbar, label.theta, label.b_in
    z = _F(0)
    return CommutatorMatrix(
        (
            (z, t, h, z),
            (-t, z, z, h),
            (-h, z, z, h * b),
            (z, -h, -h * b, z),
        )
    )


def standard_j(degrees: int) -> Mat:
    """Standard symplectic form on ``(positions..., momenta...)``."""
    n = 2 * degrees
    rows = [[_F(0)] * n for _ in range(n)]
    for k in range(degrees):
        rows[k][degrees + k] = _F(1)
        rows[degrees + k][k] = _F(-1)
    return tuple(tuple(r) for r in rows)


def omega_ccr(hbar, degrees: int = 2) -> CommutatorMatrix:
    if degrees < 1:
        raise UnsupportedDimension("degrees must be positive")
    return CommutatorMatrix(linalg.scale(hbar, standard_j(degrees)))


def _pf(m: Mat, idx: tuple) -> Fraction:
    if not idx:
        return _F(1)
    i0, rest = idx[0], idx[1:]
    total = _F(0)
    for k, j in enumerate(rest):
        a = m[i0][j]
        if a:
            sign = -1 if k % 2 else 1
            total += sign * a * _pf(m, rest[:k] + rest[k + 1 :])
    return total


def pfaffian(omega: CommutatorMatrix) -> Fraction:
    """Pfaffian by recursive expansion along the first row (dims 2..8)."""
    if omega.dim > 8:
        raise UnsupportedDimension(f"pfaffian supports dims 2, 4, 6, 8; got {omega.dim}")
    return _pf(omega.entries, tuple(range(omega.dim)))


def push_commutators(s: RealizationMatrix, omega: CommutatorMatrix) -> CommutatorMatrix:
    """Commutators of ``s @ eta`` given those of ``eta``: ``s @ omega @ s.T``."""
    if s.dim != omega.dim:
        raise DimensionMismatch(f"realization is {s.dim}x{s.dim}, omega is {omega.dim}x{omega.dim}")
    return CommutatorMatrix(linalg.congruence(s.entries, omega.entries))


def central_character(label: SectorLabel) -> CentralCharacterVector:
    # normalization: dpi(Z1, Z2, Z3) = i (hbar, theta, hbar * b_in)
    return CentralCharacterVector(label.hbar, label.theta, label.hbar * label.b_in)


def conjugation_compatible(omega_a: CommutatorMatrix, omega_b: CommutatorMatrix) -> bool:
    """Necessary condition for a componentwise unitary conjugation: equal commutators."""
    if omega_a.dim != omega_b.dim:
        raise DimensionMismatch(f"dims {omega_a.dim} and {omega_b.dim} differ")
    return omega_a.entries == omega_b.entries
