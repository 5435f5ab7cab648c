"""Deciding the Borsuk-Ulam property over the unipotent torus bundle.

A self-map class is four integers (r, s, u, v).  Odd fiber degree r gets a
concrete braid witness whose equations all verify; even r gets a parity
obstruction: every candidate triple leaves a residual word of odd area
where a solution would need area zero.

Run with: python3 demos/04_classify_unipotent_bundle.py
"""

import json

from braidulam import (
    CandidateFamily,
    HomClassMA,
    Involution,
    check_diagram,
    classify_ma,
    diagram_images_from_witness,
    parity_certificate,
    verify_certificate,
    verify_system,
    witness_ma,
)

# --- odd degree: constructive witness ---------------------------------------
cls = HomClassMA(r=3, s=1, u=-1, v=2)
w = witness_ma(cls)
print("witness for", cls)
for name, text in w.to_text().items():
    print(f"  {name} = {text}")

report = verify_system(w, cls)
for eq in report.equations:
    print(f"  {eq.label}: {'ok' if eq.holds else 'FAILED'}")

phi, psi = diagram_images_from_witness(w)
print("diagram commutes:", check_diagram(phi, psi, cls, Involution.MA_TAU).ok)

# --- even degree: parity obstruction ----------------------------------------
even = HomClassMA(r=2, s=0, u=1, v=0)
cand = CandidateFamily(m1=1, n1=-1, a1=((0, 2, 1),), a2=(), a3=((1, 0, -1),))
rep = parity_certificate(even, cand)
print(f"\ncandidate residual for {even}:")
print("  exponent sums:", rep.residual_gamma, " area:", rep.residual_area)
print("  odd, so this candidate cannot solve the system:", rep.odd)

# --- the one-call interface ---------------------------------------------------
cert = classify_ma(even, seed=0, samples=16)
print("\nverdict:", cert.verdict)
print("certificate re-verifies:", verify_certificate(cert)[0])

# Certificates serialize to JSON; this is exactly what the CLI prints.
doc = json.dumps(cert.to_json(), sort_keys=True)
print("certificate size:", len(doc), "bytes of JSON")
