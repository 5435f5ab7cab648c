"""Fundamental groups of the torus bundles and their orbit spaces.

Covered here:

* ``MAElem`` -- elements of the semidirect product Z^2 x Z attached to a
  unit-determinant integer monodromy matrix (the torus-bundle groups, in
  either the standard or the inverted-first-generator "tilde" basis),
* ``T3Elem`` / ``KleinS1Elem`` -- the trivial-bundle group Z^3 and the
  Klein-bottle-times-circle group,
* the degree-2 covering pushforwards and their Z_2 quotient maps for the
  three free involutions handled by the classifier,
* homomorphism-class descriptors for self-maps over the circle and the
  fiberwise-conjugacy relation between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix; group elements only ever carry det = +-1."""

    a11: int
    a12: int
    a21: int
    a22: int

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "Mat2":
        d = self.det()
        if d not in (1, -1):
            raise ValueError("only unit-determinant matrices are invertible over Z")
        return Mat2(d * self.a22, -d * self.a12, -d * self.a21, d * self.a11)

    def __pow__(self, k: int) -> "Mat2":
        out = MAT_IDENTITY
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out @ base
        return out

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        """Action on exponent column vectors."""
        return (self.a11 * v[0] + self.a12 * v[1], self.a21 * v[0] + self.a22 * v[1])

    def rows(self) -> list[list[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]


MAT_IDENTITY = Mat2(1, 0, 0, 1)

#: Monodromy of the nontrivial bundle treated here, and of its orbit space.
MONODROMY_MA = Mat2(1, 1, 0, 1)
MONODROMY_ORBIT = Mat2(1, 2, 0, 1)

#: The same matrices after inverting the first fiber generator
#: (alpha~ = alpha^-1); all diagram computations run in this basis.
MONODROMY_MA_TILDE = Mat2(1, -1, 0, 1)
MONODROMY_ORBIT_TILDE = Mat2(1, -2, 0, 1)


def commutes(d: Mat2, a: Mat2) -> bool:
    """Exact integer test of d a = a d."""
    return d @ a == a @ d


@dataclass(frozen=True)
class MAElem:
    """Normal form alpha^a beta^b c^k in Z^2 x Z with the given monodromy.

    Conjugation by c multiplies exponent columns by the monodromy matrix:
    c alpha c^-1 = alpha^a11 beta^a21 and c beta c^-1 = alpha^a12 beta^a22.
    """

    a: int
    b: int
    k: int
    monodromy: Mat2

    def __post_init__(self):
        if not self.monodromy.is_unimodular():
            raise ValueError("monodromy must have determinant +-1")

    def __mul__(self, other: "MAElem") -> "MAElem":
        if self.monodromy != other.monodromy:
            raise ValueError("cannot multiply elements with different monodromies")
        va, vb = (self.monodromy ** self.k).apply((other.a, other.b))
        return MAElem(self.a + va, self.b + vb, self.k + other.k, self.monodromy)

    def inverse(self) -> "MAElem":
        va, vb = (self.monodromy ** (-self.k)).apply((self.a, self.b))
        return MAElem(-va, -vb, -self.k, self.monodromy)

    def __invert__(self) -> "MAElem":
        return self.inverse()

    def __pow__(self, k: int) -> "MAElem":
        out = MAElem(0, 0, 0, self.monodromy)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return (self.a, self.b, self.k) == (0, 0, 0)

    @classmethod
    def identity(cls, monodromy: Mat2) -> "MAElem":
        return cls(0, 0, 0, monodromy)

    @classmethod
    def alpha(cls, monodromy: Mat2, exp: int = 1) -> "MAElem":
        return cls(exp, 0, 0, monodromy)

    @classmethod
    def beta(cls, monodromy: Mat2, exp: int = 1) -> "MAElem":
        return cls(0, exp, 0, monodromy)

    @classmethod
    def c(cls, monodromy: Mat2, exp: int = 1) -> "MAElem":
        return cls(0, 0, exp, monodromy)

    def __str__(self) -> str:
        return f"alpha^{self.a} beta^{self.b} c^{self.k}"


def tilde_from_standard(g: MAElem) -> MAElem:
    """Rewrite a standard-basis element in the tilde basis (alpha -> alpha~^-1)."""
    if g.monodromy == MONODROMY_MA:
        target = MONODROMY_MA_TILDE
    elif g.monodromy == MONODROMY_ORBIT:
        target = MONODROMY_ORBIT_TILDE
    else:
        raise ValueError("no tilde convention registered for this monodromy")
    return MAElem(-g.a, g.b, g.k, target)


def standard_from_tilde(g: MAElem) -> MAElem:
    if g.monodromy == MONODROMY_MA_TILDE:
        target = MONODROMY_MA
    elif g.monodromy == MONODROMY_ORBIT_TILDE:
        target = MONODROMY_ORBIT
    else:
        raise ValueError("element is not in a registered tilde basis")
    return MAElem(-g.a, g.b, g.k, target)


@dataclass(frozen=True)
class T3Elem:
    """Element alpha^e1 beta^e2 c^e3 of the trivial-bundle group Z^3."""

    e1: int
    e2: int
    e3: int

    def __mul__(self, other: "T3Elem") -> "T3Elem":
        return T3Elem(self.e1 + other.e1, self.e2 + other.e2, self.e3 + other.e3)

    def inverse(self) -> "T3Elem":
        return T3Elem(-self.e1, -self.e2, -self.e3)

    def __invert__(self) -> "T3Elem":
        return self.inverse()

    def __pow__(self, k: int) -> "T3Elem":
        return T3Elem(self.e1 * k, self.e2 * k, self.e3 * k)

    def is_identity(self) -> bool:
        return self == T3Elem(0, 0, 0)

    def __str__(self) -> str:
        return f"alpha^{self.e1} beta^{self.e2} c^{self.e3}"


@dataclass(frozen=True)
class KleinS1Elem:
    """Normal form a^p b^q c^r with b a b^-1 = a^-1 and c central."""

    p: int
    q: int
    r: int

    def __mul__(self, other: "KleinS1Elem") -> "KleinS1Elem":
        sign = -1 if self.q % 2 else 1
        return KleinS1Elem(self.p + sign * other.p, self.q + other.q, self.r + other.r)

    def inverse(self) -> "KleinS1Elem":
        sign = -1 if self.q % 2 else 1
        return KleinS1Elem(-sign * self.p, -self.q, -self.r)

    def __invert__(self) -> "KleinS1Elem":
        return self.inverse()

    def __pow__(self, k: int) -> "KleinS1Elem":
        out = KleinS1Elem(0, 0, 0)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self == KleinS1Elem(0, 0, 0)

    def __str__(self) -> str:
        return f"a^{self.p} b^{self.q} c^{self.r}"


# --- homomorphism classes ---------------------------------------------------


@dataclass(frozen=True)
class HomClassMA:
    """Self-map class over the circle for the unipotent bundle.

    Encodes f(alpha) = alpha^r, f(beta) = alpha^s beta^r,
    f(c) = alpha^u beta^v c; the fiber matrix [[r, s], [0, r]] automatically
    commutes with the monodromy.
    """

    r: int
    s: int
    u: int
    v: int

    def fiber_matrix(self) -> Mat2:
        return Mat2(self.r, self.s, 0, self.r)

    def is_valid(self) -> bool:
        return commutes(self.fiber_matrix(), MONODROMY_MA) and self.respects_relations()

    def respects_relations(self) -> bool:
        """Re-derive, not assume, that the generator images satisfy every
        defining relation of the source presentation."""
        fa = self.apply(MAElem.alpha(MONODROMY_MA))
        fb = self.apply(MAElem.beta(MONODROMY_MA))
        fc = self.apply(MAElem.c(MONODROMY_MA))
        ok = (fa * fb == fb * fa)
        ok = ok and fc * fa * fc.inverse() == self.apply(
            MAElem(MONODROMY_MA.a11, MONODROMY_MA.a21, 0, MONODROMY_MA)
        )
        ok = ok and fc * fb * fc.inverse() == self.apply(
            MAElem(MONODROMY_MA.a12, MONODROMY_MA.a22, 0, MONODROMY_MA)
        )
        return ok

    def apply(self, g: MAElem) -> MAElem:
        """Apply the induced endomorphism to a standard-basis element."""
        if g.monodromy != MONODROMY_MA:
            raise ValueError("apply expects a standard-basis element")
        fa = MAElem(self.r, 0, 0, MONODROMY_MA)
        fb = MAElem(self.s, self.r, 0, MONODROMY_MA)
        fc = MAElem(self.u, self.v, 1, MONODROMY_MA)
        return (fa ** g.a) * (fb ** g.b) * (fc ** g.k)

    def tilde_images(self) -> dict[str, MAElem]:
        """Generator images in the tilde basis: f(alpha~) = alpha~^r,
        f(beta) = alpha~^-s beta^r, f(c) = alpha~^-u beta^v c."""
        t = MONODROMY_MA_TILDE
        return {
            "alpha_tilde": MAElem(self.r, 0, 0, t),
            "beta": MAElem(-self.s, self.r, 0, t),
            "c": MAElem(-self.u, self.v, 1, t),
        }


@dataclass(frozen=True)
class HomClassT3:
    """Self-map class of the trivial bundle: f(alpha) = alpha^r1 beta^r2,
    f(beta) = alpha^r3 beta^r4, f(c) = alpha^u beta^v c."""

    r1: int
    r2: int
    r3: int
    r4: int
    u: int
    v: int

    def apply(self, g: T3Elem) -> T3Elem:
        return T3Elem(
            self.r1 * g.e1 + self.r3 * g.e2 + self.u * g.e3,
            self.r2 * g.e1 + self.r4 * g.e2 + self.v * g.e3,
            g.e3,
        )

    def images(self) -> dict[str, T3Elem]:
        return {
            "alpha": T3Elem(self.r1, self.r2, 0),
            "beta": T3Elem(self.r3, self.r4, 0),
            "c": T3Elem(self.u, self.v, 1),
        }


HomClass = Union[HomClassMA, HomClassT3]


# --- involutions, coverings and their Z_2 quotients -------------------------


class Involution(Enum):
    """The free involutions over the circle supported by the classifier."""

    MA_TAU = "tau"
    T3_TAU1 = "tau1"
    T3_TAU2 = "tau2"


OrbitElem = Union[MAElem, T3Elem, KleinS1Elem]


def covering_push(involution: Involution, g) -> OrbitElem:
    """Pushforward along the degree-2 covering onto the orbit space.

    * MA_TAU:  alpha~ -> a^2, beta -> b, c -> c  (orbit monodromy [[1,2],[0,1]],
      handled here in the tilde basis on both sides);
    * T3_TAU1: alpha -> alpha^2, beta -> beta, c -> c (orbit space is again
      the 3-torus);
    * T3_TAU2: alpha -> b^2, beta -> a, c -> c (orbit space is the Klein
      bottle times the circle).
    """
    if involution is Involution.MA_TAU:
        if not isinstance(g, MAElem) or g.monodromy != MONODROMY_MA_TILDE:
            raise ValueError("MA pushforward expects a tilde-basis element")
        return MAElem(2 * g.a, g.b, g.k, MONODROMY_ORBIT_TILDE)
    if not isinstance(g, T3Elem):
        raise ValueError("trivial-bundle pushforward expects a T3Elem")
    if involution is Involution.T3_TAU1:
        return T3Elem(2 * g.e1, g.e2, g.e3)
    # b^(2 e1) a^(e2) c^(e3) = a^(e2) b^(2 e1) c^(e3): even b-powers are central
    return KleinS1Elem(g.e2, 2 * g.e1, g.e3)


def theta_tau(involution: Involution, g: OrbitElem) -> int:
    """The Z_2-valued quotient homomorphism whose kernel is exactly the
    image of ``covering_push``."""
    if involution is Involution.MA_TAU:
        if not isinstance(g, MAElem):
            raise ValueError("expected an orbit-space MAElem")
        return g.a % 2
    if involution is Involution.T3_TAU1:
        if not isinstance(g, T3Elem):
            raise ValueError("expected a T3Elem")
        return g.e1 % 2
    if not isinstance(g, KleinS1Elem):
        raise ValueError("expected a KleinS1Elem")
    return g.q % 2


# --- fiberwise conjugacy of homomorphism classes ----------------------------


@dataclass(frozen=True)
class SnEquivalence:
    """Outcome of the bounded fiber-conjugacy search.

    ``unknown-within-bound`` is never upgraded to a proof of inequivalence;
    ``inequivalent`` is only reported when conjugation-invariant data
    already differs.
    """

    status: str  # "equivalent" | "inequivalent" | "unknown-within-bound"
    conjugator: Optional[MAElem]
    reason: str

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"


def sn_equivalent(h1: HomClassMA, h2: HomClassMA, bound: int) -> SnEquivalence:
    """Search fiber elements omega = alpha^a beta^b, |a|,|b| <= bound, with
    h2(g) = omega h1(g) omega^-1 on all generators.

    Fiber conjugation is inert on the fiber-generator images (the fiber is
    abelian), so differing (r, s) pairs are provably inequivalent; the same
    computation shows the beta-coordinate of the c-image is invariant.
    """
    if (h1.r, h1.s) != (h2.r, h2.s):
        return SnEquivalence(
            "inequivalent",
            None,
            "fiber-generator images differ; fiber conjugation fixes them",
        )
    gens = (
        MAElem.alpha(MONODROMY_MA),
        MAElem.beta(MONODROMY_MA),
        MAElem.c(MONODROMY_MA),
    )
    targets = tuple(h2.apply(g) for g in gens)
    sources = tuple(h1.apply(g) for g in gens)
    box = [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    # smallest conjugator first, so equal classes get the identity
    box.sort(key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab))
    for a, b in box:
        omega = MAElem(a, b, 0, MONODROMY_MA)
        if all(
            omega * src * omega.inverse() == tgt
            for src, tgt in zip(sources, targets)
        ):
            return SnEquivalence("equivalent", omega, "conjugator found")
    if h1.v != h2.v:
        return SnEquivalence(
            "inequivalent",
            None,
            "the beta-coordinate of the c-image is invariant under fiber conjugation",
        )
    return SnEquivalence(
        "unknown-within-bound",
        None,
        f"no fiber conjugator with exponents bounded by {bound}",
    )


# --- JSON descriptors --------------------------------------------------------


def class_to_descriptor(cls: HomClass) -> dict:
    if isinstance(cls, HomClassMA):
        return {"bundle": "MA", "class": {"r": cls.r, "s": cls.s, "u": cls.u, "v": cls.v}}
    return {
        "bundle": "T3",
        "matrix": [[cls.r1, cls.r3, cls.u], [cls.r2, cls.r4, cls.v]],
    }


def class_from_descriptor(desc: dict) -> HomClass:
    try:
        bundle = desc["bundle"].upper()
    except (TypeError, KeyError, AttributeError):
        raise ValueError("descriptor needs a 'bundle' field of 'MA' or 'T3'") from None
    if bundle == "MA":
        try:
            c = desc["class"]
            return HomClassMA(int(c["r"]), int(c["s"]), int(c["u"]), int(c["v"]))
        except (TypeError, KeyError, ValueError):
            raise ValueError("MA descriptor needs class fields r, s, u, v") from None
    if bundle == "T3":
        try:
            (r1, r3, u), (r2, r4, v) = desc["matrix"]
            return HomClassT3(int(r1), int(r2), int(r3), int(r4), int(u), int(v))
        except (TypeError, KeyError, ValueError):
            raise ValueError("T3 descriptor needs a 2x3 integer matrix") from None
    raise ValueError(f"unknown bundle {desc['bundle']!r}")
