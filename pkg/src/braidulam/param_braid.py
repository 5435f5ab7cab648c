"""Braid groups parametrized over the circle.

An element is a torus braid times a power of the base loop ``c``, in the
normal form ``free . w^m . z^n . sigma^s . c^k``.  Two bundle kinds are
supported:

* ``Bundle.MA_UNIPOTENT`` -- monodromy [[1, 1], [0, 1]].  Conjugation by c
  fixes x, w, B and sigma, sends y -> x^-1 y, and acts on the central pair
  as (m, n) -> (m - n, n).
* ``Bundle.T3_TRIVIAL`` -- the product bundle; c is central and the group
  is the direct sum of the torus braid group with Z.

Other monodromies are rejected outright rather than silently
mis-multiplied.
"""

from __future__ import annotations

from enum import Enum
from typing import Union

from .freegroup import X, Y
from .fundamental import (
    MAElem,
    Mat2,
    MONODROMY_MA,
    MONODROMY_MA_TILDE,
    T3Elem,
)
from .torus_braid import (
    B_TWIST,
    SIGMA,
    W_CENTER,
    Z_CENTER,
    RelationCheck,
    TorusBraid,
    format_braid,
    parse_braid,
    rho,
)


class Bundle(Enum):
    MA_UNIPOTENT = "MA"
    T3_TRIVIAL = "T3"


def kind_for_matrix(monodromy: Mat2) -> Bundle:
    """Map a monodromy matrix to a supported bundle kind."""
    if monodromy == MONODROMY_MA:
        return Bundle.MA_UNIPOTENT
    if monodromy == Mat2(1, 0, 0, 1):
        return Bundle.T3_TRIVIAL
    raise ValueError(f"unsupported monodromy {monodromy}")


def c_conjugate(a: TorusBraid, kind: Bundle, power: int = 1) -> TorusBraid:
    """Conjugate a torus braid by c^power."""
    if kind is Bundle.T3_TRIVIAL or power == 0:
        return a
    # y -> x^-power y on the free part; the z-coordinate leaks into w
    free = a.free.substitute(X, X ** (-power) * Y)
    return TorusBraid(free, a.m - power * a.n, a.n, a.s)


class ParamBraid:
    """Element of a parametrized 2-string braid group over the circle."""

    __slots__ = ("braid", "k", "kind")

    def __init__(self, braid: TorusBraid = TorusBraid(), k: int = 0,
                 kind: Bundle = Bundle.MA_UNIPOTENT):
        object.__setattr__(self, "braid", braid)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("ParamBraid is immutable")

    @property
    def swap_parity(self) -> int:
        """Z_2 parity of the strand swap; pure elements map to 0."""
        return self.braid.s

    @property
    def base_degree(self) -> int:
        """Projection to the base circle's group Z; kernel is the fiber
        braid group (the k = 0 subgroup)."""
        return self.k

    @property
    def is_pure(self) -> bool:
        return self.braid.s == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamBraid):
            return NotImplemented
        return self.braid == other.braid and self.k == other.k and self.kind == other.kind

    def __hash__(self) -> int:
        return hash((self.braid, self.k, self.kind))

    def __mul__(self, other: "ParamBraid") -> "ParamBraid":
        if not isinstance(other, ParamBraid):
            return NotImplemented
        if self.kind is not other.kind:
            raise ValueError("cannot multiply braids over different bundles")
        pushed = c_conjugate(other.braid, self.kind, self.k)
        return ParamBraid(self.braid * pushed, self.k + other.k, self.kind)

    def inverse(self) -> "ParamBraid":
        inv = c_conjugate(self.braid.inverse(), self.kind, -self.k)
        return ParamBraid(inv, -self.k, self.kind)

    def __invert__(self) -> "ParamBraid":
        return self.inverse()

    def __pow__(self, p: int) -> "ParamBraid":
        out = ParamBraid(kind=self.kind)
        base = self if p >= 0 else self.inverse()
        for _ in range(abs(p)):
            out = out * base
        return out

    def conjugated_by(self, g: "ParamBraid") -> "ParamBraid":
        return g * self * g.inverse()

    def __repr__(self) -> str:
        return f"ParamBraid({format_param_braid(self)!r}, kind={self.kind.value})"

    def __str__(self) -> str:
        return format_param_braid(self)


def identity(kind: Bundle) -> ParamBraid:
    return ParamBraid(kind=kind)


def c_loop(kind: Bundle, exp: int = 1) -> ParamBraid:
    """The base-circle generator (written c~ upstairs, c-bar downstairs)."""
    return ParamBraid(TorusBraid(), exp, kind)


def embed(braid: TorusBraid, kind: Bundle) -> ParamBraid:
    """Include a torus braid as a fiberwise element (k = 0)."""
    return ParamBraid(braid, 0, kind)


def first_strand_image(a: ParamBraid) -> Union[MAElem, T3Elem]:
    """Project a pure parametrized braid to the total-space group.

    The free part is invisible; the central pair (m, n) lands on the fiber
    generators and k on the base loop.  For the unipotent bundle the fiber
    coordinates are read in the tilde basis.
    """
    if a.braid.s != 0:
        raise ValueError("first-strand projection is undefined for swap braids")
    if a.kind is Bundle.MA_UNIPOTENT:
        return MAElem(a.braid.m, a.braid.n, a.k, MONODROMY_MA_TILDE)
    return T3Elem(a.braid.m, a.braid.n, a.k)


def parametrized_relations(kind: Bundle) -> list[tuple[str, TorusBraid, TorusBraid]]:
    """Conjugation action of the base loop on the fiber generators, plus the
    swap conjugations, as exact (lhs, rhs) pairs of torus braids."""
    x_b = TorusBraid(X)
    y_b = TorusBraid(Y)
    conj = lambda b: c_conjugate(b, kind, 1)  # noqa: E731
    if kind is Bundle.MA_UNIPOTENT:
        rels = [
            ("c x c^-1 = x", conj(x_b), x_b),
            ("c y c^-1 = x^-1 y", conj(y_b), TorusBraid(X.inverse() * Y)),
            ("c w c^-1 = w", conj(W_CENTER), W_CENTER),
            ("c z c^-1 = w^-1 z", conj(Z_CENTER), TorusBraid(m=-1, n=1)),
            ("c B c^-1 = B", conj(B_TWIST), B_TWIST),
            ("c sigma c^-1 = sigma (det = 1)", conj(SIGMA), SIGMA),
        ]
        for i, j in ((1, 1), (2, 1)):
            rels.append((f"c rho({i},1) c^-1 = rho({i},1)", conj(rho(i, j)), rho(i, j)))
        for i in (1, 2):
            rels.append(
                (
                    f"c rho({i},2) c^-1 = rho({i},1)^-1 rho({i},2)",
                    conj(rho(i, 2)),
                    rho(i, 1).inverse() * rho(i, 2),
                )
            )
    else:
        rels = [
            (f"c {name} c^-1 = {name} (direct sum)", conj(b), b)
            for name, b in (
                ("x", x_b),
                ("y", y_b),
                ("w", W_CENTER),
                ("z", Z_CENTER),
                ("sigma", SIGMA),
            )
        ]
    # swap conjugations in the (x, y, w, z) coordinates
    rels.extend(
        [
            ("s x s^-1 = B x^-1 w", x_b.conjugated_by(SIGMA), TorusBraid(B_TWIST.free * X.inverse(), 1, 0)),
            ("s y s^-1 = B y^-1 z", y_b.conjugated_by(SIGMA), TorusBraid(B_TWIST.free * Y.inverse(), 0, 1)),
            ("s w s^-1 = w", W_CENTER.conjugated_by(SIGMA), W_CENTER),
            ("s z s^-1 = z", Z_CENTER.conjugated_by(SIGMA), Z_CENTER),
        ]
    )
    return rels


def parametrized_relations_report(kind: Bundle) -> list[RelationCheck]:
    return [
        RelationCheck(label, lhs == rhs, format_braid(lhs), format_braid(rhs))
        for label, lhs, rhs in parametrized_relations(kind)
    ]


# --- text format: torus braid format plus a trailing ` c^<k>` ---------------


def format_param_braid(a: ParamBraid) -> str:
    base = format_braid(a.braid)
    return f"{base} c^{a.k}" if a.k else base


def parse_param_braid(text: str, kind: Bundle) -> ParamBraid:
    body = text.strip()
    k = 0
    if body.endswith(")") or body.endswith("s"):
        pass
    else:
        head, _, tail = body.rpartition(" ")
        if not tail.startswith("c^"):
            raise ValueError(f"malformed parametrized braid text {text!r}")
        try:
            k = int(tail[2:])
        except ValueError:
            raise ValueError(f"bad base exponent in {text!r}") from None
        body = head
    return ParamBraid(parse_braid(body), k, kind)
