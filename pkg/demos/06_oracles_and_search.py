"""Independent cross-checks: a naive reducer, a second way to compute
areas, and an exhaustive bounded search over the equation system.

Run with: python3 demos/06_oracles_and_search.py
"""

import random

from braidulam import (
    CandidateFamily,
    FreeWord,
    HomClassMA,
    X,
    Y,
    conjugate_train,
    enclosed_area,
    estimate_candidates,
    express_as_B_conjugates,
    naive_reduce,
    search_system,
)

# The naive reducer deletes one adjacent inverse pair at a time; it must
# agree with the run-length reducer on everything.
rng = random.Random(0)
letters = [(rng.choice("xy"), rng.choice((1, -1))) for _ in range(24)]
print("letters reduce to:", naive_reduce(letters))
print("agrees with the library constructor:", naive_reduce(letters) == FreeWord(letters))

# Any balanced word decomposes into conjugates of B with L-shaped
# conjugators; the total twist is a second, shoelace-free area computation.
w = X**2 * Y * X**-2 * Y**-1
factors = express_as_B_conjugates(w)
print("\ndecomposition of [x^2, y]:", factors)
print("expansion reduces back:", conjugate_train(factors) == w)
print("twist total vs area:", sum(t for _, _, t in factors), enclosed_area(w))

# The search enumerates the constrained candidate shape exhaustively.  The
# cost model keeps the bounds honest:
print("\ncandidates at bounds (1, 1):", estimate_candidates(1, 1))

hits = search_system(HomClassMA(1, 0, 0, 0), max_factors=1, max_exp=1)
print("degree-1 class: ", len(hits), "solutions, e.g.", hits[2].candidate)
print("canonical one found:", CandidateFamily(0, 0, ((0, 0, -1),), (), ()) in [h.candidate for h in hits])

print("degree-2 class: ", len(search_system(HomClassMA(2, 0, 0, 0), 1, 1)), "solutions (parity forbids any)")
