"""Braid groups parametrized over the circle: the unipotent torus bundle
versus the trivial one, and the projections used by the classifier.

Run with: python3 demos/03_parametrized_braids.py
"""

from braidulam import (
    Bundle,
    SIGMA,
    TorusBraid,
    Y,
    Z_CENTER,
    c_conjugate,
    c_loop,
    embed,
    first_strand_image,
    format_param_braid,
    parametrized_relations_report,
)

MA = Bundle.MA_UNIPOTENT
T3 = Bundle.T3_TRIVIAL

# Over the unipotent bundle the base loop c acts on the fiber braids:
print("c y c^-1 =", c_conjugate(TorusBraid(Y), MA))
print("c z c^-1 =", c_conjugate(Z_CENTER, MA))
print("c sigma c^-1 =", c_conjugate(SIGMA, MA))

# Over the trivial bundle the action is trivial and the group splits:
print("trivial bundle leaves y alone:", c_conjugate(TorusBraid(Y), T3) == TorusBraid(Y))

# Elements carry a c-exponent; multiplication pushes c across:
c = c_loop(MA)
y = embed(TorusBraid(Y), MA)
conj = c * y * c.inverse()
print("as parametrized braids, c y c^-1 =", format_param_braid(conj))

# Both quotient homomorphisms are read off the normal form: the swap
# parity detects the two-strand exchange, the base degree the winding.
s_c = embed(SIGMA, MA) * c
print("swap parity of sigma*c:", s_c.swap_parity, "  base degree:", s_c.base_degree)

# Pure parametrized braids project to the total-space fundamental group;
# the free part lives on the second strand and vanishes.
el = first_strand_image(embed(TorusBraid(m=-2, n=1), MA) * c**3)
print("projection of w^-2 z c^3:", el)

# The conjugation action itself is certified against the relation set:
report = parametrized_relations_report(MA)
print("bundle relations hold:", all(c_.holds for c_ in report))
