import random

import pytest

from braidulam.freegroup import X, Y
from braidulam.fundamental import (
    MAElem,
    Mat2,
    MONODROMY_MA,
    MONODROMY_MA_TILDE,
    T3Elem,
)
from braidulam.param_braid import (
    Bundle,
    ParamBraid,
    c_conjugate,
    c_loop,
    embed,
    first_strand_image,
    format_param_braid,
    identity,
    kind_for_matrix,
    parametrized_relations_report,
    parse_param_braid,
)
from braidulam.torus_braid import SIGMA, TorusBraid, Z_CENTER
from helpers import random_braid, random_param_braid

MA = Bundle.MA_UNIPOTENT
T3 = Bundle.T3_TRIVIAL


class TestBaseConjugation:
    def test_moves_y(self):
        assert c_conjugate(TorusBraid(Y), MA) == TorusBraid(X.inverse() * Y)

    def test_moves_z(self):
        assert c_conjugate(Z_CENTER, MA) == TorusBraid(m=-1, n=1)

    def test_fixes_sigma(self):
        assert c_conjugate(SIGMA, MA) == SIGMA

    def test_trivial_bundle_inert(self):
        rng = random.Random(0)
        for _ in range(50):
            a = random_braid(rng)
            assert c_conjugate(a, T3, rng.randint(-3, 3)) == a

    def test_inverse_power_undoes(self):
        rng = random.Random(1)
        for _ in range(100):
            a = random_braid(rng)
            p = rng.randint(-3, 3)
            assert c_conjugate(c_conjugate(a, MA, p), MA, -p) == a

    def test_power_iterates(self):
        rng = random.Random(2)
        for _ in range(50):
            a = random_braid(rng)
            assert c_conjugate(c_conjugate(a, MA), MA) == c_conjugate(a, MA, 2)

    def test_automorphism(self):
        rng = random.Random(3)
        for _ in range(100):
            a, b = random_braid(rng), random_braid(rng)
            assert c_conjugate(a * b, MA) == c_conjugate(a, MA) * c_conjugate(b, MA)


class TestGroupLaw:
    def test_c_fixes_sigma_braid(self):
        sigma = embed(SIGMA, MA)
        c = c_loop(MA)
        assert c * sigma * c.inverse() == sigma

    def test_c_fixes_x(self):
        x = embed(TorusBraid(X), MA)
        c = c_loop(MA)
        assert c * x * c.inverse() == x

    def test_identity_neutral(self):
        rng = random.Random(4)
        for kind in (MA, T3):
            for _ in range(50):
                a = random_param_braid(rng, kind)
                assert a * identity(kind) == a

    def test_kind_mismatch(self):
        with pytest.raises(ValueError):
            identity(MA) * identity(T3)

    def test_associative_both_kinds(self):
        rng = random.Random(5)
        for kind in (MA, T3):
            for _ in range(200):
                a, b, c = (random_param_braid(rng, kind) for _ in range(3))
                assert (a * b) * c == a * (b * c)

    def test_inverse(self):
        rng = random.Random(6)
        for kind in (MA, T3):
            for _ in range(100):
                a = random_param_braid(rng, kind)
                assert a * a.inverse() == identity(kind)
                assert a.inverse().inverse() == a

    def test_inverse_examples(self):
        c = c_loop(MA)
        assert c.inverse().k == -1
        assert c.inverse().braid == TorusBraid()
        sc = embed(SIGMA, MA) * c
        assert sc.inverse() * sc == identity(MA)

    def test_trivial_bundle_is_direct_sum(self):
        rng = random.Random(7)
        for _ in range(100):
            a, b = random_param_braid(rng, T3), random_param_braid(rng, T3)
            prod = a * b
            assert prod.braid == a.braid * b.braid
            assert prod.k == a.k + b.k


class TestQuotients:
    def test_base_degree(self):
        assert (c_loop(MA) ** 3).base_degree == 3
        assert embed(SIGMA, MA).base_degree == 0

    def test_base_degree_additive(self):
        rng = random.Random(8)
        for _ in range(100):
            a, b = random_param_braid(rng, MA), random_param_braid(rng, MA)
            assert (a * b).base_degree == a.base_degree + b.base_degree

    def test_base_degree_kernel(self):
        rng = random.Random(9)
        for _ in range(100):
            a = random_param_braid(rng, MA)
            assert (a.base_degree == 0) == (a.k == 0)

    def test_swap_parity(self):
        assert (embed(SIGMA, MA) * c_loop(MA)).swap_parity == 1
        assert c_loop(MA).swap_parity == 0

    def test_swap_parity_additive(self):
        rng = random.Random(10)
        for _ in range(100):
            a, b = random_param_braid(rng, MA), random_param_braid(rng, MA)
            assert (a * b).swap_parity == (a.swap_parity + b.swap_parity) % 2

    def test_pure_braids_have_parity_zero(self):
        rng = random.Random(11)
        for _ in range(50):
            a = random_param_braid(rng, MA)
            pure = ParamBraid(TorusBraid(a.braid.free, a.braid.m, a.braid.n, 0), a.k, MA)
            assert pure.swap_parity == 0


class TestProjection:
    def test_central_coordinates(self):
        a = embed(TorusBraid(m=-4, n=5), MA)
        assert first_strand_image(a) == MAElem(-4, 5, 0, MONODROMY_MA_TILDE)

    def test_base_generator(self):
        assert first_strand_image(c_loop(MA)) == MAElem.c(MONODROMY_MA_TILDE)

    def test_free_part_invisible(self):
        assert first_strand_image(embed(TorusBraid(X**9), MA)) == MAElem.identity(
            MONODROMY_MA_TILDE
        )

    def test_trivial_bundle_target(self):
        a = ParamBraid(TorusBraid(m=2, n=-1), 3, T3)
        assert first_strand_image(a) == T3Elem(2, -1, 3)

    def test_swap_rejected(self):
        with pytest.raises(ValueError):
            first_strand_image(embed(SIGMA, MA))

    def test_homomorphism(self):
        rng = random.Random(12)
        for kind in (MA, T3):
            for _ in range(100):
                a, b = random_param_braid(rng, kind), random_param_braid(rng, kind)
                pa = ParamBraid(TorusBraid(a.braid.free, a.braid.m, a.braid.n, 0), a.k, kind)
                pb = ParamBraid(TorusBraid(b.braid.free, b.braid.m, b.braid.n, 0), b.k, kind)
                assert first_strand_image(pa * pb) == first_strand_image(pa) * first_strand_image(pb)


class TestRelations:
    def test_unipotent_relations(self):
        assert all(check.holds for check in parametrized_relations_report(MA))

    def test_trivial_relations(self):
        assert all(check.holds for check in parametrized_relations_report(T3))

    def test_kind_for_matrix(self):
        assert kind_for_matrix(MONODROMY_MA) is MA
        assert kind_for_matrix(Mat2(1, 0, 0, 1)) is T3
        with pytest.raises(ValueError):
            kind_for_matrix(Mat2(1, 2, 0, 1))
        with pytest.raises(ValueError):
            kind_for_matrix(Mat2(0, -1, 1, 0))


class TestTextFormat:
    def test_round_trip(self):
        rng = random.Random(13)
        for kind in (MA, T3):
            for _ in range(200):
                a = random_param_braid(rng, kind)
                assert parse_param_braid(format_param_braid(a), kind) == a

    def test_example(self):
        a = parse_param_braid("(x B^-1 ; 0, 0) s c^-1", MA)
        assert a.k == -1
        assert a.braid.s == 1

    def test_zero_power_omitted(self):
        assert format_param_braid(embed(TorusBraid(X), MA)) == "(x ; 0, 0)"

    def test_errors(self):
        for bad in ("(x ; 0, 0) c^", "(x ; 0, 0) q^2", "c^2"):
            with pytest.raises(ValueError):
                parse_param_braid(bad, MA)
