"""Exact reduced-word arithmetic in the rank-2 free group F(x, y).

Words are stored in syllable run-length form ``((gen, exp), ...)`` and are
freely reduced on construction, so "reduced" is a class invariant rather
than a runtime flag.  Everything here is immutable and pure.

Two integer invariants drive the rest of the library:

* ``exponent_sums`` -- the exponent-sum pair (image in Z x Z),
* ``enclosed_area`` -- the signed area enclosed by the closed lattice path
  of a balanced word, oriented so the square commutator [x, y^-1] has
  area +1.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

ALPHABET = ("x", "y")

# Exponents are contractually signed 64-bit; anything larger is an error,
# never a wraparound.
_EXP_MAX = 2**63 - 1


class ExponentSums(NamedTuple):
    """Exponent-sum pair of a word: its image in Z x Z."""

    ex: int
    ey: int


def _checked(exp: int) -> int:
    if abs(exp) > _EXP_MAX:
        raise OverflowError("syllable exponent exceeds the signed 64-bit range")
    return exp


def _normalize(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    """Freely reduce a syllable sequence (merge runs, drop zero exponents)."""
    out: list[tuple[str, int]] = []
    for gen, exp in syllables:
        if gen not in ALPHABET:
            raise ValueError(f"unknown generator {gen!r}")
        if exp == 0:
            continue
        _checked(exp)
        while out and out[-1][0] == gen:
            exp = _checked(out[-1][1] + exp)
            out.pop()
            if exp == 0:
                break
        else:
            out.append((gen, exp))
            continue
        if exp != 0:
            out.append((gen, exp))
    return tuple(out)


class FreeWord:
    """A freely reduced word in F(x, y)."""

    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        object.__setattr__(self, "_syllables", _normalize(syllables))

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @property
    def syllables(self) -> tuple[tuple[str, int], ...]:
        return self._syllables

    @classmethod
    def gen(cls, symbol: str, exp: int = 1) -> "FreeWord":
        return cls(((symbol, exp),))

    def __bool__(self) -> bool:
        return bool(self._syllables)

    def is_identity(self) -> bool:
        return not self._syllables

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        # concatenation only needs reduction at the seam; _normalize does
        # exactly that in one pass
        return FreeWord(self._syllables + other._syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self._syllables)))

    def __invert__(self) -> "FreeWord":
        return self.inverse()

    def __pow__(self, n: int) -> "FreeWord":
        if n == 0:
            return FreeWord()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def conjugated_by(self, g: "FreeWord") -> "FreeWord":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def letters(self) -> Iterator[tuple[str, int]]:
        """Yield single letters (gen, +1/-1), expanding exponents."""
        for gen, exp in self._syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield (gen, step)

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self._syllables)

    def substitute(self, image_of_x: "FreeWord", image_of_y: "FreeWord") -> "FreeWord":
        """Apply the endomorphism x -> image_of_x, y -> image_of_y."""
        images = {"x": image_of_x, "y": image_of_y}
        pieces: list[tuple[str, int]] = []
        for gen, exp in self._syllables:
            img = images[gen] if exp > 0 else images[gen].inverse()
            for _ in range(abs(exp)):
                pieces.extend(img._syllables)
        return FreeWord(pieces)

    def exponent_sums(self) -> ExponentSums:
        """Image in Z x Z; a homomorphism whose kernel is generated by
        conjugates of the square commutator B."""
        ex = ey = 0
        for gen, exp in self._syllables:
            if gen == "x":
                ex += exp
            else:
                ey += exp
        return ExponentSums(ex, ey)

    def is_balanced(self) -> bool:
        return self.exponent_sums() == (0, 0)

    def __repr__(self) -> str:
        return f"FreeWord({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = FreeWord()
X = FreeWord.gen("x")
Y = FreeWord.gen("y")


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """[a, b] = a b a^-1 b^-1."""
    return a * b * a.inverse() * b.inverse()


#: The square commutator B = [x, y^-1] = x y^-1 x^-1 y.  It generates the
#: kernel of ``exponent_sums`` as a normal subgroup and encloses area +1.
B = commutator(X, Y.inverse())


def staircase_word(n: int, d: int) -> FreeWord:
    """(x^n y)^d x^(-n d) y^-d: a staircase loop with area -d(d+1)n/2."""
    return (X**n * Y) ** d * X ** (-n * d) * Y ** (-d)


def twist_train(n: int) -> FreeWord:
    """(B x^-1)^n x^n: a telescoping train of shifted squares, area n."""
    return (B * X.inverse()) ** n * X**n


def enclosed_area(word: FreeWord) -> int:
    """Signed area enclosed by the closed lattice path of a balanced word.

    The word is read as a path on Z x Z with steps x -> (+1, 0) and
    y -> (0, +1).  The orientation convention makes the square commutator
    B = [x, y^-1] enclose +1; on balanced words this is a homomorphism to Z
    and every conjugate p B^l p^-1 has area l.

    Raises ValueError when the word is not balanced (the path not closed).
    """
    if not word.is_balanced():
        raise ValueError("enclosed_area needs a balanced word (exponent sums zero)")
    px = py = 0
    doubled = 0  # shoelace sum, twice the ordinary signed area
    for gen, exp in word.syllables:
        if gen == "x":
            # horizontal run at height py
            doubled -= exp * py
            px += exp
        else:
            # vertical run at abscissa px
            doubled += exp * px
            py += exp
    # rectilinear closed paths always enclose an integral area
    assert doubled % 2 == 0, "closed rectilinear path with half-integral area"
    return -(doubled // 2)


# --- text grammar ----------------------------------------------------------
#
# Whitespace-separated tokens `x`, `y` with an optional `^<int>` suffix;
# `B` expands to `x y^-1 x^-1 y`; `1` is the identity.

def parse_word(text: str) -> FreeWord:
    pieces: list[tuple[str, int]] = []
    tokens = text.split()
    if not tokens:
        raise ValueError("empty word text (use '1' for the identity)")
    for tok in tokens:
        base, caret, suffix = tok.partition("^")
        if caret:
            try:
                exp = int(suffix)
            except ValueError:
                raise ValueError(f"bad exponent in token {tok!r}") from None
        else:
            exp = 1
        if base == "1":
            if caret:
                raise ValueError("the identity token '1' takes no exponent")
            continue
        if base == "B":
            pieces.extend((B**exp).syllables)
        elif base in ALPHABET:
            pieces.append((base, exp))
        else:
            raise ValueError(f"unknown token {tok!r}")
    return FreeWord(pieces)


def format_word(word: FreeWord) -> str:
    if word.is_identity():
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in word.syllables)
