"""Moyal star products for a constant commutator matrix on polynomial symbols.

With the convention ``[x_a, x_b]_star = i * omega[a][b]`` the product is

    f * g = sum_k (i/2)^k / k! * omega^{a1 b1} ... omega^{ak bk}
            (d_{a1} ... d_{ak} f) (d_{b1} ... d_{bk} g)

and, for polynomials, stops at ``k = min(deg f, deg g)``. Coefficients are
Gaussian rationals so everything is exact.
"""

import random
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Dict, Iterable, Optional, Tuple, Union

from . import linalg
from .darboux import intrinsic_canonicalization
from .errors import DegenerateLabel, DimensionMismatch
from .group import EquivalenceStatus, EquivalenceVerdict, decide_equivalence
from .rational import parse_rational
from .sector import CommutatorMatrix, RealizationMatrix, SectorLabel, omega_nc, push_commutators

VARIABLES = ("x", "y", "p_x", "p_y")
NVARS = len(VARIABLES)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, "re", Fraction(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / n, -other.im / n)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


I = GaussianRational(0, 1)
ZERO = GaussianRational()
ONE = GaussianRational(1)


def _grlex_key(e: Exponent):
    return (sum(e), e)


class PolySymbol:
    """Polynomial in ``(x, y, p_x, p_y)`` with Gaussian-rational coefficients.

    Treated as immutable; arithmetic returns new symbols. Zero coefficients
    are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Exponent, object]] = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != NVARS or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e}")
            c = GaussianRational.coerce(c)
            if c:
                clean[e] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = {e: c for e, c in terms.items() if c}
        return obj

    @property
    def terms(self) -> Dict[Exponent, GaussianRational]:
        return dict(self._terms)

    @classmethod
    def constant(cls, c) -> "PolySymbol":
        return cls({(0,) * NVARS: c})

    @classmethod
    def variable(cls, name: Union[str, int]) -> "PolySymbol":
        k = VARIABLES.index(name) if isinstance(name, str) else int(name)
        e = [0] * NVARS
        e[k] = 1
        return cls({tuple(e): 1})

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, PolySymbol):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return PolySymbol._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolySymbol._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        """Pointwise (commutative) product."""
        other = _as_poly(other)
        acc: dict = {}
        _mul_into(acc, self._terms, other._terms, Fraction(1), Fraction(0))
        return _from_acc(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = PolySymbol.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self, k: int, times: int = 1) -> "PolySymbol":
        out = {}
        for e, c in self._terms.items():
            if e[k] < times:
                continue
            f = 1
            for j in range(times):
                f *= e[k] - j
            e2 = list(e)
            e2[k] -= times
            out[tuple(e2)] = GaussianRational(c.re * f, c.im * f)
        return PolySymbol._raw(out)

    def partial(self, alpha: Exponent) -> "PolySymbol":
        out = self
        for k, n in enumerate(alpha):
            if n:
                out = out.derivative(k, n)
        return out

    def to_records(self):
        return [
            {"exponents": list(e), "re": str(c.re), "im": str(c.im)}
            for e, c in sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))
        ]

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "PolySymbol":
        terms: Dict[Exponent, GaussianRational] = {}
        for rec in records:
            e = tuple(rec["exponents"])
            c = GaussianRational(parse_rational(str(rec.get("re", "0"))), parse_rational(str(rec.get("im", "0"))))
            terms[e] = terms[e] + c if e in terms else c
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "PolySymbol(0)"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: _grlex_key(t[0])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, e) if k) or "1"
            parts.append(f"({c.re}{'+' if c.im >= 0 else ''}{c.im}i)*{mono}")
        return "PolySymbol(" + " + ".join(parts) + ")"


def _integerize(terms: dict):
    """Scale coefficients to Gaussian integers over one common denominator."""
    den = 1
    for c in terms.values():
        den = lcm(den, c.re.denominator, c.im.denominator)
    ints = [
        (e, c.re.numerator * (den // c.re.denominator), c.im.numerator * (den // c.im.denominator))
        for e, c in terms.items()
    ]
    return ints, den


def _mul_into(acc: dict, t1: dict, t2: dict, sre: Fraction, sim: Fraction) -> None:
    """acc[e1 + e2] += (sre + i sim) * c1 * c2, accumulated as [re, im] Fractions.

    Pairwise products run in integers; one Fraction per output monomial.
    """
    ints1, d1 = _integerize(t1)
    ints2, d2 = _integerize(t2)
    ds = lcm(sre.denominator, sim.denominator)
    sr, si = sre.numerator * (ds // sre.denominator), sim.numerator * (ds // sim.denominator)
    if si:
        ints1 = [(e, sr * a - si * b, sr * b + si * a) for e, a, b in ints1]
    elif sr != 1:
        ints1 = [(e, sr * a, sr * b) for e, a, b in ints1]
    local: dict = {}
    for e1, a, b in ints1:
        for e2, c, d in ints2:
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
            re, im = a * c - b * d, a * d + b * c
            slot = local.get(e)
            if slot is None:
                local[e] = [re, im]
            else:
                slot[0] += re
                slot[1] += im
    den = d1 * d2 * ds
    for e, (re, im) in local.items():
        slot = acc.get(e)
        if slot is None:
            acc[e] = [Fraction(re, den), Fraction(im, den)]
        else:
            slot[0] += Fraction(re, den)
            slot[1] += Fraction(im, den)


def _from_acc(acc: dict) -> PolySymbol:
    return PolySymbol._raw({e: GaussianRational(re, im) for e, (re, im) in acc.items() if re or im})


def _as_poly(x) -> PolySymbol:
    return x if isinstance(x, PolySymbol) else PolySymbol.constant(x)


def _check_omega(omega: CommutatorMatrix):
    if omega.dim != NVARS:
        raise DimensionMismatch(f"star products here act on 4 variables; omega is {omega.dim}x{omega.dim}")


@lru_cache(maxsize=256)
def _bidifferential_terms(omega: CommutatorMatrix, k: int):
    """Coefficients of ``(sum_ab omega_ab d_a (x) d_b)^k`` keyed by (alpha, beta) multi-indices."""
    if k == 0:
        return {((0,) * NVARS, (0,) * NVARS): Fraction(1)}
    nz = [(a, b, omega[a, b]) for a in range(NVARS) for b in range(NVARS) if omega[a, b]]
    nxt: Dict[Tuple[Exponent, Exponent], Fraction] = {}
    for (al, be), c in _bidifferential_terms(omega, k - 1).items():
        for a, b, w in nz:
            al2 = al[:a] + (al[a] + 1,) + al[a + 1 :]
            be2 = be[:b] + (be[b] + 1,) + be[b + 1 :]
            key = (al2, be2)
            nxt[key] = nxt.get(key, Fraction(0)) + c * w
    return {key: c for key, c in nxt.items() if c}


def moyal_star(f: PolySymbol, g: PolySymbol, omega: CommutatorMatrix) -> PolySymbol:
    _check_omega(omega)
    f, g = _as_poly(f), _as_poly(g)
    if f.is_zero() or g.is_zero():
        return PolySymbol()
    acc: dict = {}
    _mul_into(acc, f._terms, g._terms, Fraction(1), Fraction(0))
    df: Dict[Exponent, PolySymbol] = {}
    dg: Dict[Exponent, PolySymbol] = {}
    for k in range(1, min(f.degree, g.degree) + 1):
        # (i/2)^k / k! = i^k * base
        base = Fraction(1, 2**k * factorial(k))
        rot = k % 4
        for (al, be), c in _bidifferential_terms(omega, k).items():
            if al not in df:
                df[al] = f.partial(al)
            if be not in dg:
                dg[be] = g.partial(be)
            if df[al].is_zero() or dg[be].is_zero():
                continue
            r = base * c
            sre, sim = ((r, Fraction(0)), (Fraction(0), r), (-r, Fraction(0)), (Fraction(0), -r))[rot]
            _mul_into(acc, df[al]._terms, dg[be]._terms, sre, sim)
    return _from_acc(acc)


def star_commutator(f: PolySymbol, g: PolySymbol, omega: CommutatorMatrix) -> PolySymbol:
    return moyal_star(f, g, omega) - moyal_star(g, f, omega)


def poisson_bracket(f: PolySymbol, g: PolySymbol, omega: CommutatorMatrix) -> PolySymbol:
    """``{f, g} = omega_ab d_a f d_b g``."""
    _check_omega(omega)
    out = PolySymbol()
    for a in range(NVARS):
        for b in range(NVARS):
            if omega[a, b]:
                out = out + f.derivative(a) * g.derivative(b) * omega[a, b]
    return out


def pullback_linear(f: PolySymbol, t) -> PolySymbol:
    """``f o T``: replace variable ``j`` by ``sum_k T[j][k] * var_k``."""
    if hasattr(t, "matrix"):
        t = t.matrix
    if not isinstance(t, RealizationMatrix):
        t = RealizationMatrix(t)
    if t.dim != NVARS:
        raise DimensionMismatch(f"pullback needs a 4x4 matrix, got {t.dim}x{t.dim}")
    images = [
        sum((PolySymbol.variable(k) * t[j, k] for k in range(NVARS) if t[j, k]), PolySymbol())
        for j in range(NVARS)
    ]
    powers = [{0: PolySymbol.constant(1)} for _ in range(NVARS)]

    def power(j, n):
        cache = powers[j]
        if n not in cache:
            cache[n] = power(j, n - 1) * images[j]
        return cache[n]

    out = PolySymbol()
    for e, c in _as_poly(f)._terms.items():
        term = PolySymbol.constant(c)
        for j, n in enumerate(e):
            if n:
                term = term * power(j, n)
        out = out + term
    return out


def random_poly(rng: random.Random, max_degree: int = 3, n_terms: int = 4, coeff_range: int = 5) -> PolySymbol:
    """Sparse random polynomial with small Gaussian-rational coefficients."""
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        e = [0] * NVARS
        for _ in range(deg):
            e[rng.randrange(NVARS)] += 1
        re = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        im = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        terms[tuple(e)] = GaussianRational(re, im)
    return PolySymbol(terms)


@dataclass(frozen=True)
class ShadowReport:
    label: SectorLabel
    darboux_matrix: RealizationMatrix
    target_omega: CommutatorMatrix
    samples: int
    intertwining_verified: bool
    equivalence: EquivalenceVerdict
    narrative: str

    @property
    def sectors_equivalent(self) -> bool:
        return self.equivalence.status is EquivalenceStatus.EQUIVALENT

    def to_dict(self):
        return {
            "label": self.label.to_dict(),
            "darboux_matrix": self.darboux_matrix.to_list(),
            "target_omega": self.target_omega.to_list(),
            "samples": self.samples,
            "intertwining_verified": self.intertwining_verified,
            "sectors_equivalent": self.sectors_equivalent,
            "equivalence": self.equivalence.to_dict(),
            "narrative": self.narrative,
        }


def shadow_report(label: SectorLabel, samples: int = 8, seed: int = 0) -> ShadowReport:
    """Compare the coarse star-algebra picture with the sector verdict.

    Pulling back along the intrinsic Darboux map ``T`` intertwines the star
    product of ``T omega T^T = hbar J`` with that of ``omega``; the sectors
    are nonetheless compared through their central characters.
    """
    if not label.is_regular:
        raise DegenerateLabel(f"label ({label.hbar}, {label.theta}, {label.b_in}) is off the regular stratum")
    omega = omega_nc(label)
    dmap = intrinsic_canonicalization(label)
    t = dmap.matrix
    target = push_commutators(t, omega)
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        f, g = random_poly(rng, 2, 3), random_poly(rng, 2, 3)
        lhs = pullback_linear(moyal_star(f, g, target), t)
        rhs = moyal_star(pullback_linear(f, t), pullback_linear(g, t), omega)
        ok = ok and lhs == rhs
    verdict = decide_equivalence(label, label.quotient_partner())
    narrative = (
        f"Symbol level: f -> f o T maps the star product of {label.hbar}*J onto that of the sector's "
        f"commutator matrix ({'verified' if ok else 'FAILED'} on {samples} random pairs), so the bare "
        "star algebras are isomorphic. "
        f"Sector level: comparison with ({label.hbar}, 0, 0) is {verdict.status.value} ({verdict.reason}); "
        "the star algebra alone does not see the central character."
    )
    return ShadowReport(label, t, target, samples, ok, verdict, narrative)
