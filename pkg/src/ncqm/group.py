"""The step-two nilpotent group ``G_NC`` in exponential coordinates.

Lie algebra basis: central ``Z1, Z2, Z3`` and noncentral ``X1, X2, P1, P2``
with the only nonzero brackets

    [X1, P1] = [X2, P2] = Z1,   [X1, X2] = Z2,   [P1, P2] = Z3.

Group elements are written ``exp(theta Z1 + phi Z2 + psi Z3 + q.X + p.P)``;
since all brackets are central the BCH series stops at the first
commutator.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import linalg
from .rational import parse_rational
from .sector import CommutatorMatrix, SectorLabel, central_character, omega_nc

Pair = Tuple[Fraction, Fraction]
_HALF = Fraction(1, 2)


def _pair(v) -> Pair:
    a, b = v
    return (Fraction(a), Fraction(b))


@dataclass(frozen=True)
class LieElement:
    z1: Fraction = Fraction(0)
    z2: Fraction = Fraction(0)
    z3: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    p1: Fraction = Fraction(0)
    p2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("z1", "z2", "z3", "q1", "q2", "p1", "p2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(*(a + b for a, b in zip(self.coords(), other.coords())))

    def __neg__(self) -> "LieElement":
        return LieElement(*(-a for a in self.coords()))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scaled(self, c) -> "LieElement":
        return LieElement(*(Fraction(c) * a for a in self.coords()))

    def coords(self):
        return (self.z1, self.z2, self.z3, self.q1, self.q2, self.p1, self.p2)

    def noncentral(self):
        return (self.q1, self.q2, self.p1, self.p2)

    def is_zero(self) -> bool:
        return not any(self.coords())


# basis of the Lie algebra, in the order (Z1, Z2, Z3, X1, X2, P1, P2)
Z1 = LieElement(z1=1)
Z2 = LieElement(z2=1)
Z3 = LieElement(z3=1)
X1 = LieElement(q1=1)
X2 = LieElement(q2=1)
P1 = LieElement(p1=1)
P2 = LieElement(p2=1)
BASIS = (Z1, Z2, Z3, X1, X2, P1, P2)
NONCENTRAL_BASIS = (X1, X2, P1, P2)


def bracket(u: LieElement, v: LieElement) -> LieElement:
    return LieElement(
        z1=(u.q1 * v.p1 - u.p1 * v.q1) + (u.q2 * v.p2 - u.p2 * v.q2),
        z2=u.q1 * v.q2 - u.q2 * v.q1,
        z3=u.p1 * v.p2 - u.p2 * v.p1,
    )


@dataclass(frozen=True)
class GroupElement:
    theta: Fraction = Fraction(0)
    phi: Fraction = Fraction(0)
    psi: Fraction = Fraction(0)
    q: Pair = (Fraction(0), Fraction(0))
    p: Pair = (Fraction(0), Fraction(0))

    def __post_init__(self):
        for name in ("theta", "phi", "psi"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        object.__setattr__(self, "q", _pair(self.q))
        object.__setattr__(self, "p", _pair(self.p))

    @classmethod
    def exp(cls, x: LieElement) -> "GroupElement":
        return cls(x.z1, x.z2, x.z3, (x.q1, x.q2), (x.p1, x.p2))

    def log(self) -> LieElement:
        return LieElement(self.theta, self.phi, self.psi, *self.q, *self.p)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return bch_multiply(self, other)

    def inverse(self) -> "GroupElement":
        return GroupElement.exp(-self.log())

    def to_dict(self):
        return {
            "theta": str(self.theta),
            "phi": str(self.phi),
            "psi": str(self.psi),
            "q1": str(self.q[0]),
            "q2": str(self.q[1]),
            "p1": str(self.p[0]),
            "p2": str(self.p[1]),
        }

    @classmethod
    def from_dict(cls, d) -> "GroupElement":
        v = {k: parse_rational(str(d.get(k, "0"))) for k in ("theta", "phi", "psi", "q1", "q2", "p1", "p2")}
        return cls(v["theta"], v["phi"], v["psi"], (v["q1"], v["q2"]), (v["p1"], v["p2"]))


IDENTITY = GroupElement()


def bch_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """``exp(x) exp(y) = exp(x + y + [x, y]/2)``."""
    x, y = g.log(), h.log()
    return GroupElement.exp(x + y + bracket(x, y).scaled(_HALF))


@dataclass(frozen=True)
class WeylHeisenbergElement:
    """Coordinates ``(theta, q, p)`` on ``G_WH``."""

    theta: Fraction = Fraction(0)
    q: Pair = (Fraction(0), Fraction(0))
    p: Pair = (Fraction(0), Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "theta", Fraction(self.theta))
        object.__setattr__(self, "q", _pair(self.q))
        object.__setattr__(self, "p", _pair(self.p))

    def __mul__(self, other: "WeylHeisenbergElement") -> "WeylHeisenbergElement":
        q, p, q2, p2 = self.q, self.p, other.q, other.p
        cocycle = _HALF * (q[0] * p2[0] + q[1] * p2[1] - p[0] * q2[0] - p[1] * q2[1])
        return WeylHeisenbergElement(
            self.theta + other.theta + cocycle,
            (q[0] + q2[0], q[1] + q2[1]),
            (p[0] + p2[0], p[1] + p2[1]),
        )

    def to_dict(self):
        return {
            "theta": str(self.theta),
            "q1": str(self.q[0]),
            "q2": str(self.q[1]),
            "p1": str(self.p[0]),
            "p2": str(self.p[1]),
        }


def quotient_project(g: GroupElement) -> WeylHeisenbergElement:
    """Forget the two extra central coordinates ``phi`` and ``psi``."""
    return WeylHeisenbergElement(g.theta, g.q, g.p)


def local_exponent(g: GroupElement, h: GroupElement) -> Tuple[Fraction, Fraction, Fraction]:
    """The R^3-valued 2-cocycle on translations: central part of ``g h`` minus the sum."""
    x, y = g.log(), h.log()
    c = bracket(x, y).scaled(_HALF)
    return (c.z1, c.z2, c.z3)


@dataclass(frozen=True)
class Functional:
    """A point of the dual: values on ``(Z1, Z2, Z3)`` and ``(X1, X2, P1, P2)``."""

    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    b1: Fraction = Fraction(0)
    b2: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2", "c1", "c2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __call__(self, x: LieElement) -> Fraction:
        return sum((a * b for a, b in zip(self.coords(), x.coords())), Fraction(0))

    def coords(self):
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.c1, self.c2)

    def central(self):
        return (self.a1, self.a2, self.a3)

    def noncentral(self):
        return (self.b1, self.b2, self.c1, self.c2)

    def to_dict(self):
        keys = ("a1", "a2", "a3", "b1", "b2", "c1", "c2")
        return {k: str(v) for k, v in zip(keys, self.coords())}

    @classmethod
    def from_dict(cls, d) -> "Functional":
        return cls(*(parse_rational(str(d.get(k, "0"))) for k in ("a1", "a2", "a3", "b1", "b2", "c1", "c2")))


def coadjoint_act(g: GroupElement, l: Functional) -> Functional:
    """``(Ad*_g l)(Y) = l(Ad_{g^-1} Y) = l(Y - [x, Y])`` with ``x = log g``."""
    x = g.log()
    vals = [l(y) - l(bracket(x, y)) for y in BASIS]
    return Functional(*vals)


def kirillov_form(l: Functional) -> CommutatorMatrix:
    """``B_l(u, v) = l([u, v])`` on the noncentral basis ``(X1, X2, P1, P2)``."""
    return CommutatorMatrix(
        tuple(tuple(l(bracket(u, v)) for v in NONCENTRAL_BASIS) for u in NONCENTRAL_BASIS)
    )


@dataclass(frozen=True)
class OrbitData:
    rank: int
    kirillov: CommutatorMatrix
    label: Optional[SectorLabel]  # None on the degenerate stratum (a1 == 0)
    central: Tuple[Fraction, Fraction, Fraction]

    def to_dict(self):
        return {
            "rank": self.rank,
            "kirillov": self.kirillov.to_list(),
            "label": self.label.to_dict() if self.label is not None else "Degenerate",
            "central": [str(a) for a in self.central],
        }


def orbit_data(l: Functional) -> OrbitData:
    b = kirillov_form(l)
    label = SectorLabel(l.a1, l.a2, l.a3 / l.a1) if l.a1 != 0 else None
    return OrbitData(linalg.rank(b.entries), b, label, l.central())


def connecting_element(l: Functional, target: Functional) -> Optional[GroupElement]:
    """A group element carrying ``l`` to ``target``, or None if they lie on different orbits.

    Moving along the orbit shifts the noncentral values by ``B_l @ x``, so the
    orbit is the affine set ``{central fixed} x (noncentral + image(B_l))``;
    at rank 4 that is a full copy of R^4.
    """
    if l.central() != target.central():
        return None
    b = kirillov_form(l).entries
    delta = [t - s for s, t in zip(l.noncentral(), target.noncentral())]
    m, pivots, _ = linalg.row_reduce(tuple(row + (d,) for row, d in zip(b, delta)))
    if 4 in pivots:
        return None
    x = [Fraction(0)] * 4
    for i in reversed(range(len(pivots))):
        c = pivots[i]
        x[c] = (m[i][4] - sum(m[i][j] * x[j] for j in range(c + 1, 4))) / m[i][c]
    return GroupElement.exp(LieElement(0, 0, 0, *x))


def factors_through_quotient(label: SectorLabel) -> bool:
    chi = central_character(label)
    return chi.alpha2 == 0 and chi.alpha3 == 0


class EquivalenceStatus(enum.Enum):
    EQUIVALENT = "Equivalent"
    INEQUIVALENT = "Inequivalent"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: EquivalenceStatus
    reason: str

    def to_dict(self):
        return {"status": self.status.value, "reason": self.reason}


def is_supported(label: SectorLabel) -> bool:
    """Regular stratum or the quotient sector; nothing else is classified."""
    return label.is_regular or label.is_quotient_sector


def decide_equivalence(a: SectorLabel, b: SectorLabel) -> EquivalenceVerdict:
    for lab in (a, b):
        if not is_supported(lab):
            return EquivalenceVerdict(
                EquivalenceStatus.UNSUPPORTED,
                f"label ({lab.hbar}, {lab.theta}, {lab.b_in}) lies off the regular stratum",
            )
    ca, cb = central_character(a).as_tuple(), central_character(b).as_tuple()
    if ca == cb:
        return EquivalenceVerdict(EquivalenceStatus.EQUIVALENT, "central characters coincide")
    diff = [name for name, x, y in zip(("Z1", "Z2", "Z3"), ca, cb) if x != y]
    return EquivalenceVerdict(
        EquivalenceStatus.INEQUIVALENT,
        "central characters differ on " + ", ".join(diff),
    )
