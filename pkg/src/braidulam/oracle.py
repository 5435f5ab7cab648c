"""Independent brute-force implementations used to cross-validate the
main library: a naive reducer, a collection-process decomposition of
balanced words into square-commutator conjugates (an alternative area
computation), and a bounded exhaustive search over the equation system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .freegroup import FreeWord, X, Y
from .fundamental import HomClassMA
from .param_braid import Bundle, c_conjugate
from .torus_braid import SIGMA, TorusBraid
from .classifier import (
    CandidateFamily,
    Factor,
    WitnessTriple,
    conjugate_train,
    verify_system,
)


def naive_reduce(letters: Sequence[tuple[str, int]]) -> FreeWord:
    """Reduce a sequence of single signed letters by repeatedly deleting
    the first adjacent inverse pair until none remains.

    Deliberately quadratic and structure-free; agreement with the run-length
    reducer is asserted over large random corpora.
    """
    work = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError("naive_reduce expects single letters with exponent +-1")
        work.append((gen, exp))
    changed = True
    while changed:
        changed = False
        for i in range(len(work) - 1):
            (g1, e1), (g2, e2) = work[i], work[i + 1]
            if g1 == g2 and e1 == -e2:
                del work[i : i + 2]
                changed = True
                break
    return FreeWord(work)


def express_as_B_conjugates(word: FreeWord) -> list[Factor]:
    """Decompose a balanced word into a product of factors
    x^e y^f B^t y^-f x^-e by a collection process.

    The word is walked as a lattice path; x-steps taken off the horizontal
    axis are traded for the column of unit squares joining them back to it.
    The expansion of the returned factor list reduces to the input word,
    and the twist total sum(t) recomputes the enclosed area independently
    of the shoelace formula.
    """
    if not word.is_balanced():
        raise ValueError("decomposition needs a balanced word (exponent sums zero)")
    factors: list[Factor] = []
    px = py = 0
    for gen, step in word.letters():
        if gen == "y":
            py += step
            continue
        if step == 1:
            if py > 0:
                factors.extend((px, j, 1) for j in range(py, 0, -1))
            elif py < 0:
                factors.extend((px, j, -1) for j in range(py + 1, 1))
            px += 1
        else:
            ax = px - 1
            if py > 0:
                factors.extend((ax, j, -1) for j in range(1, py + 1))
            elif py < 0:
                factors.extend((ax, j, 1) for j in range(0, py, -1))
            px -= 1
    return factors


# --- bounded search over the equation system --------------------------------


@dataclass(frozen=True)
class SearchHit:
    candidate: CandidateFamily
    witness: WitnessTriple


def estimate_candidates(max_factors: int, max_exp: int) -> int:
    """Cost model of the exhaustive enumeration.

    Shift exponents range over a span of 2*max_exp + 1 values, twist
    exponents exclude zero; each of the three factor lists has
    sum(count^c for c in 0..max_factors) shapes, and the two central
    parameters multiply by span^2.
    """
    span = 2 * max_exp + 1
    per_factor = span * span * (span - 1)
    per_list = sum(per_factor**c for c in range(max_factors + 1))
    return span * span * per_list**3


def _factor_lists(max_factors: int, max_exp: int) -> list[tuple[Factor, ...]]:
    exps = range(-max_exp, max_exp + 1)
    single = [
        (e, f, t) for e in exps for f in exps for t in exps if t != 0
    ]
    lists: list[tuple[Factor, ...]] = [()]
    for count in range(1, max_factors + 1):
        lists.extend(itertools.product(single, repeat=count))
    return lists


def search_system(
    cls: HomClassMA,
    max_factors: int,
    max_exp: int,
    limit: int = 5_000_000,
) -> list[SearchHit]:
    """Exhaustively enumerate candidate families within bounds and return
    every one that solves the full equation system, in lexicographic order
    of (m1, n1, factor lists).

    Raises ValueError when the cost model predicts more than ``limit``
    candidates; non-empty results are existence proofs, an empty result is
    only an exhaustion statement for these bounds.
    """
    estimate = estimate_candidates(max_factors, max_exp)
    if estimate > limit:
        raise ValueError(
            f"bounds enumerate ~{estimate} candidates, above the limit {limit}"
        )
    lists = _factor_lists(max_factors, max_exp)
    span = range(-max_exp, max_exp + 1)
    kind = Bundle.MA_UNIPOTENT
    sigma_conj = lambda b: b.conjugated_by(SIGMA)  # noqa: E731

    # everything a2/a3-dependent is loop-invariant; precompute the
    # conjugates once so the hot loop is pure normal-form multiplication
    p2_table = [
        (a2, TorusBraid(conjugate_train(a2), -cls.s, cls.r)) for a2 in lists
    ]
    p2_table = [
        (a2, p2, sigma_conj(p2), c_conjugate(p2, kind, 1)) for a2, p2 in p2_table
    ]
    hits: list[SearchHit] = []
    for m1 in span:
        for n1 in span:
            p3_table = []
            for a3 in lists:
                p3 = TorusBraid(X ** (-n1) * conjugate_train(a3), -cls.u, cls.v)
                p3_table.append((a3, p3, sigma_conj(p3)))
            for a1 in lists:
                free1 = X ** (-2 * m1 + cls.r) * Y ** (-2 * n1) * conjugate_train(a1)
                p1 = TorusBraid(free1, m1, n1)
                z1 = p1 * SIGMA
                square_inv = (z1 * z1).inverse()
                c_p1 = c_conjugate(p1, kind, 1)
                for a2, p2, sig_p2, c_p2 in p2_table:
                    if p1 * sig_p2 != p2 * p1:
                        continue
                    for a3, p3, sig_p3 in p3_table:
                        if p3 * c_p1 != p1 * sig_p3:
                            continue
                        if p3 * c_p2 != square_inv * p2 * p3:
                            continue
                        cand = CandidateFamily(m1, n1, a1, a2, a3)
                        report = verify_system(cand.build(cls), cls)
                        if report.ok:
                            hits.append(SearchHit(cand, cand.build(cls)))
    return hits
