"""Words in the rank-2 free group and the two invariants everything else
rests on: exponent sums and the enclosed lattice area.

Run with: python3 demos/01_words_and_areas.py
"""

from braidulam import (
    B,
    X,
    Y,
    commutator,
    enclosed_area,
    parse_word,
    staircase_word,
    twist_train,
)

# Words multiply with `*`, invert with `.inverse()` and reduce themselves:
w = X * Y * Y.inverse() * X
print("x y y^-1 x  reduces to:", w)
print("its inverse:           ", w.inverse())

# The text grammar round-trips; `B` abbreviates the square commutator.
print("parse('x^2 B^-1')      =", parse_word("x^2 B^-1"))
print("B                      =", B)

# Exponent sums are the image in Z x Z; balanced words trace closed paths.
print("exponent sums of x^2 y^-3:", tuple((X**2 * Y**-3).exponent_sums()))

# For a balanced word the enclosed (signed) lattice area is a homomorphism
# to Z, normalized so B encloses +1.  It is the invariant that powers the
# even-degree obstruction in the classifier.
print("area of B:             ", enclosed_area(B))
print("area of [x^4, y^2]:    ", enclosed_area(commutator(X**4, Y**2)), "(= -4*2)")

# Two closed-form families, handy as exact test fixtures:
print("staircase(3, 2) area:  ", enclosed_area(staircase_word(3, 2)), "(= -2*3*3)")
print("twist train(7) area:   ", enclosed_area(twist_train(7)), "(= 7)")

# Conjugation cannot change the area: the loop is just translated.
p = parse_word("y^2 x^-1 y x^3")
print("area of p B^5 p^-1:    ", enclosed_area(p * B**5 * p.inverse()))
