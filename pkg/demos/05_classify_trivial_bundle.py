"""The trivial bundle: a closed truth table over two involutions, plus the
fiber-level diagram data that certifies negative verdicts.

Run with: python3 demos/05_classify_trivial_bundle.py
"""

from braidulam import (
    HomClassMA,
    HomClassT3,
    Involution,
    TorusBraid,
    X,
    Y,
    check_diagram,
    classify_t3,
    covering_push,
    extend_t2_diagram_to_t3,
    restrict_t3_to_t2,
    sn_equivalent,
    T3Elem,
)

# A class is the 2x3 integer matrix [[r1, r3, u], [r2, r4, v]].  Only the
# fiber block matters for the verdict:
cls = HomClassT3(1, 0, 2, 0, 7, -9)
print("fiber restriction:", restrict_t3_to_t2(cls))

# The first involution flips one fiber circle; its orbit space is again
# the 3-torus and no class has the property:
print("tau1:", classify_t3(cls, Involution.T3_TAU1).verdict)

# The second one also reflects the other circle; the orbit space is the
# Klein bottle times the circle:
print("push of alpha through tau2:", covering_push(Involution.T3_TAU2, T3Elem(1, 0, 0)))
print("tau2:", classify_t3(cls, Involution.T3_TAU2).verdict)
print("tau2 on the zero class:", classify_t3(HomClassT3(0, 0, 0, 0, 0, 0), Involution.T3_TAU2).verdict)

# Negative tau2 verdicts come with fiber-level braid data.  Here is a
# hand-sized instance: the fiber images below satisfy the Klein relation
# and extend over the base circle by sending c to w^u z^v c.
psi_a = TorusBraid(Y**-2, 0, 1)
psi_b = TorusBraid(X.inverse(), 0, 0, 1)
print("\nKlein relation holds:", psi_b * psi_a * psi_b.inverse() == psi_a.inverse())

phibar = {"alpha": psi_b * psi_b, "beta": psi_a}
psibar = {"a": psi_a, "b": psi_b}
r1, r2 = phibar["alpha"].m, phibar["alpha"].n
r3, r4 = phibar["beta"].m, phibar["beta"].n
data_cls = HomClassT3(r1, r2, r3, r4, 2, -1)
phi, psi = extend_t2_diagram_to_t3(phibar, psibar, 2, -1)
print("extended diagram commutes:", check_diagram(phi, psi, data_cls, Involution.T3_TAU2).ok)
print("matching verdict:", classify_t3(data_cls, Involution.T3_TAU2).verdict)

# Classes conjugate by a fiber element share their verdict; the u entry is
# the only coordinate such a conjugation can move:
res = sn_equivalent(HomClassMA(2, 1, 4, 3), HomClassMA(2, 1, 0, 3), bound=5)
print("\nfiberwise conjugacy:", res.status, "via", res.conjugator)
