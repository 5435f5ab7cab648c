"""Normal-form arithmetic in the 2-string braid groups of the torus.

The pure group splits as F(x, y) + Z + Z, written here as triples
``(free; m, n)`` where m and n are the exponents of the central elements
w and z.  The full group adjoins a strand swap ``sigma`` with
``sigma^2 = B``; every element has the normal form::

    free . w^m . z^n . sigma^s        with s in {0, 1}.

Multiplication pushes sigma to the right: conjugation by sigma rewrites
the free part through x -> B x^-1, y -> B y^-1 and transfers the exponent
sums of the rewritten word into the central (m, n) coordinates; a leftover
sigma^2 lands in the free part as B.

The classical generator quadruple rho(i, j) (strand i, direction j) embeds
into this normal form; ``presentation_report`` replays the full relation
set on the embedded generators and is the correctness anchor for the
embedding.
"""

from __future__ import annotations

from typing import NamedTuple

from .freegroup import (
    B,
    IDENTITY,
    X,
    Y,
    FreeWord,
    format_word,
    parse_word,
)

_SIGMA_X_IMAGE = B * X.inverse()
_SIGMA_Y_IMAGE = B * Y.inverse()


class TorusBraid:
    """Element of the full 2-string braid group of the torus.

    ``s == 0`` elements form the pure subgroup.
    """

    __slots__ = ("free", "m", "n", "s")

    def __init__(self, free: FreeWord = IDENTITY, m: int = 0, n: int = 0, s: int = 0):
        if s not in (0, 1):
            raise ValueError("swap exponent s must be 0 or 1")
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("TorusBraid is immutable")

    @property
    def is_pure(self) -> bool:
        return self.s == 0

    @property
    def swap_parity(self) -> int:
        """The Z_2-valued homomorphism killing the pure subgroup."""
        return self.s

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusBraid):
            return NotImplemented
        return (
            self.free == other.free
            and self.m == other.m
            and self.n == other.n
            and self.s == other.s
        )

    def __hash__(self) -> int:
        return hash((self.free, self.m, self.n, self.s))

    def __mul__(self, other: "TorusBraid") -> "TorusBraid":
        if not isinstance(other, TorusBraid):
            return NotImplemented
        if self.s == 0:
            return TorusBraid(
                self.free * other.free,
                self.m + other.m,
                self.n + other.n,
                other.s,
            )
        # push sigma through the right factor's pure part
        ex, ey = other.free.exponent_sums()
        free = self.free * other.free.substitute(_SIGMA_X_IMAGE, _SIGMA_Y_IMAGE)
        if other.s == 1:
            free = free * B  # sigma^2 = B
        return TorusBraid(
            free,
            self.m + other.m + ex,
            self.n + other.n + ey,
            self.s ^ other.s,
        )

    def inverse(self) -> "TorusBraid":
        pure_inv = TorusBraid(self.free.inverse(), -self.m, -self.n, 0)
        if self.s == 0:
            return pure_inv
        # (p . sigma)^-1 = sigma^-1 . p^-1 with sigma^-1 = B^-1 sigma
        return TorusBraid(B.inverse(), 0, 0, 1) * pure_inv

    def __invert__(self) -> "TorusBraid":
        return self.inverse()

    def __pow__(self, k: int) -> "TorusBraid":
        if k == 0:
            return TorusBraid()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def conjugated_by(self, g: "TorusBraid") -> "TorusBraid":
        return g * self * g.inverse()

    def __repr__(self) -> str:
        return f"TorusBraid({format_braid(self)!r})"

    def __str__(self) -> str:
        return format_braid(self)


ONE = TorusBraid()
SIGMA = TorusBraid(s=1)
B_TWIST = TorusBraid(B)
W_CENTER = TorusBraid(m=1)
Z_CENTER = TorusBraid(n=1)


def braid_commutator(a: TorusBraid, b: TorusBraid) -> TorusBraid:
    return a * b * a.inverse() * b.inverse()


def rho(i: int, j: int) -> TorusBraid:
    """Embed the classical generator rho(i, j), strand i, direction j.

    The second-strand generators are the free letters; the first-strand
    ones are forced by the defining identities of the central elements
    w = rho(1,1) B^-1 rho(2,1) and z = rho(1,2) B^-1 rho(2,2), and are
    certified by ``presentation_report`` rather than trusted.
    """
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError("rho indices must lie in {1, 2}")
    if i == 2:
        return TorusBraid(X if j == 1 else Y)
    if j == 1:
        return TorusBraid(X.inverse() * B, 1, 0)
    return TorusBraid(Y.inverse() * B, 0, 1)


def project_first_strand(a: TorusBraid) -> tuple[int, int]:
    """First-strand projection of a pure braid: its central (m, n) pair.

    The free part travels on the second strand and is invisible here.
    Strand-swapping braids have no well-defined first strand.
    """
    if a.s != 0:
        raise ValueError("first-strand projection is undefined for swap braids")
    return (a.m, a.n)


class RelationCheck(NamedTuple):
    label: str
    holds: bool
    lhs: str
    rhs: str


def presentation_relations() -> list[tuple[str, TorusBraid, TorusBraid]]:
    """All defining relations of the pure and full presentations, evaluated
    on the embedded generators."""
    r11, r12, r21, r22 = rho(1, 1), rho(1, 2), rho(2, 1), rho(2, 2)
    bb, s = B_TWIST, SIGMA
    rels: list[tuple[str, TorusBraid, TorusBraid]] = [
        ("p2.i: [r11, r12^-1] = B", braid_commutator(r11, r12.inverse()), bb),
        ("p2.i: [r21, r22^-1] = B", braid_commutator(r21, r22.inverse()), bb),
        ("b2.i: sigma^2 = B", s * s, bb),
    ]
    for k, (r1k, r2k) in enumerate(((r11, r21), (r12, r22)), start=1):
        rels.append(
            (
                f"p2.ii(k={k}): r2k r1k r2k^-1 = B r1k B^-1",
                r2k * r1k * r2k.inverse(),
                bb * r1k * bb.inverse(),
            )
        )
        rels.append(
            (
                f"p2.ii(k={k}): r2k^-1 r1k r2k = r1k [B^-1, r1k]",
                r2k.inverse() * r1k * r2k,
                r1k * braid_commutator(bb.inverse(), r1k),
            )
        )
    rels.extend(
        [
            (
                "p2.iii: r21 r12 r21^-1 = B r12 [r11^-1, B]",
                r21 * r12 * r21.inverse(),
                bb * r12 * braid_commutator(r11.inverse(), bb),
            ),
            (
                "p2.iii: r21^-1 r12 r21 = B^-1 [B, r11] r12 [B^-1, r11]",
                r21.inverse() * r12 * r21,
                bb.inverse()
                * braid_commutator(bb, r11)
                * r12
                * braid_commutator(bb.inverse(), r11),
            ),
            (
                "p2.iv: r22 r11 r22^-1 = r11 B^-1",
                r22 * r11 * r22.inverse(),
                r11 * bb.inverse(),
            ),
            (
                "p2.iv: r22^-1 r11 r22 = r11 B [B^-1, r12]",
                r22.inverse() * r11 * r22,
                r11 * bb * braid_commutator(bb.inverse(), r12),
            ),
        ]
    )
    for k, (r1k, r2k) in enumerate(((r11, r21), (r12, r22)), start=1):
        rels.append((f"b2.v(k={k}): s r1k s^-1 = r2k", r1k.conjugated_by(s), r2k))
        rels.append(
            (
                f"b2.vi(k={k}): s r2k s^-1 = B r1k B^-1",
                r2k.conjugated_by(s),
                bb * r1k * bb.inverse(),
            )
        )
    # the defining identities of the central coordinates themselves
    rels.append(("w = r11 B^-1 r21", r11 * bb.inverse() * r21, W_CENTER))
    rels.append(("z = r12 B^-1 r22", r12 * bb.inverse() * r22, Z_CENTER))
    return rels


def presentation_report() -> list[RelationCheck]:
    """Evaluate every relation exactly; all must hold for the embedding
    to be trustworthy."""
    return [
        RelationCheck(label, lhs == rhs, format_braid(lhs), format_braid(rhs))
        for label, lhs, rhs in presentation_relations()
    ]


# --- text format ------------------------------------------------------------
#
# `(<word> ; <m>, <n>)` with an optional trailing `s` for the strand swap,
# e.g. `(x B^-1 ; 0, 0) s`.

def format_braid(a: TorusBraid) -> str:
    text = f"({format_word(a.free)} ; {a.m}, {a.n})"
    return text + " s" if a.s else text


def parse_braid(text: str) -> TorusBraid:
    body = text.strip()
    s = 0
    if body.endswith(")"):
        pass
    elif body.endswith("s") and body[:-1].rstrip().endswith(")"):
        s = 1
        body = body[:-1].rstrip()
    else:
        raise ValueError(f"malformed braid text {text!r}")
    if not body.startswith("(") or not body.endswith(")"):
        raise ValueError(f"malformed braid text {text!r}")
    inner = body[1:-1]
    if ";" not in inner:
        raise ValueError(f"missing ';' in braid text {text!r}")
    word_part, _, center_part = inner.partition(";")
    try:
        m_text, n_text = center_part.split(",")
        m, n = int(m_text), int(n_text)
    except ValueError:
        raise ValueError(f"malformed central exponents in {text!r}") from None
    return TorusBraid(parse_word(word_part), m, n, s)
