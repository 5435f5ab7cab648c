import random

import pytest

from braidulam.freegroup import B, X, Y
from braidulam.torus_braid import (
    B_TWIST,
    ONE,
    SIGMA,
    W_CENTER,
    Z_CENTER,
    TorusBraid,
    braid_commutator,
    format_braid,
    parse_braid,
    presentation_report,
    project_first_strand,
    rho,
)
from helpers import random_braid


class TestMultiplication:
    def test_sigma_conjugates_x(self):
        x = TorusBraid(X)
        assert SIGMA * x * SIGMA.inverse() == TorusBraid(B * X.inverse(), 1, 0)

    def test_sigma_squared(self):
        assert SIGMA * SIGMA == B_TWIST

    def test_identity_neutral(self):
        rng = random.Random(0)
        for _ in range(100):
            a = random_braid(rng)
            assert a * ONE == a
            assert ONE * a == a

    def test_associative(self):
        rng = random.Random(1)
        for _ in range(300):
            a, b, c = (random_braid(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_pure_componentwise(self):
        a = TorusBraid(X, 1, 2)
        b = TorusBraid(Y, -3, 5)
        assert a * b == TorusBraid(X * Y, -2, 7)


class TestInverse:
    def test_pure_example(self):
        assert TorusBraid(X, 1, 0).inverse() == TorusBraid(X.inverse(), -1, 0)

    def test_sigma(self):
        assert SIGMA.inverse() * SIGMA == ONE

    def test_random(self):
        rng = random.Random(2)
        for _ in range(200):
            a = random_braid(rng)
            assert a * a.inverse() == ONE
            assert a.inverse() * a == ONE
            assert a.inverse().inverse() == a

    def test_bad_swap_exponent(self):
        with pytest.raises(ValueError):
            TorusBraid(s=2)


class TestGeneratorEmbedding:
    def test_second_strand(self):
        assert rho(2, 1) == TorusBraid(X)
        assert rho(2, 2) == TorusBraid(Y)

    def test_first_strand(self):
        assert rho(1, 1) == TorusBraid(X.inverse() * B, 1, 0)
        assert rho(1, 2) == TorusBraid(Y.inverse() * B, 0, 1)

    def test_center_identities(self):
        assert rho(1, 1) * B_TWIST.inverse() * rho(2, 1) == W_CENTER
        assert rho(1, 2) * B_TWIST.inverse() * rho(2, 2) == Z_CENTER

    def test_bad_index(self):
        with pytest.raises(ValueError):
            rho(0, 1)

    def test_presentation_holds(self):
        report = presentation_report()
        failures = [check for check in report if not check.holds]
        assert failures == []
        assert len(report) >= 15


class TestCentralElements:
    def test_center_commutes(self):
        rng = random.Random(3)
        for _ in range(100):
            a = random_braid(rng)
            for center in (W_CENTER, Z_CENTER):
                assert a * center == center * a

    def test_sigma_fixes_center(self):
        for center in (W_CENTER, Z_CENTER):
            assert center.conjugated_by(SIGMA) == center

    def test_sigma_conjugation_squares_to_twist(self):
        rng = random.Random(4)
        for _ in range(100):
            a = random_braid(rng)
            twice = a.conjugated_by(SIGMA).conjugated_by(SIGMA)
            assert twice == a.conjugated_by(B_TWIST)

    def test_commutator_helper(self):
        a = random_braid(random.Random(5))
        assert braid_commutator(a, a) == ONE


class TestProjection:
    def test_free_part_invisible(self):
        assert project_first_strand(TorusBraid(X**5 * Y**-2)) == (0, 0)

    def test_first_strand_generator(self):
        assert project_first_strand(rho(1, 1)) == (1, 0)

    def test_central_coordinates(self):
        rng = random.Random(6)
        for _ in range(50):
            m, n = rng.randint(-9, 9), rng.randint(-9, 9)
            assert project_first_strand(TorusBraid(m=m, n=n)) == (m, n)

    def test_swap_rejected(self):
        with pytest.raises(ValueError):
            project_first_strand(SIGMA)


class TestSwapParity:
    def test_values(self):
        assert SIGMA.swap_parity == 1
        assert TorusBraid(X, 4, -1).swap_parity == 0

    def test_homomorphism(self):
        rng = random.Random(7)
        for _ in range(100):
            a, b = random_braid(rng), random_braid(rng)
            assert (a * b).swap_parity == (a.swap_parity + b.swap_parity) % 2


class TestTextFormat:
    def test_example(self):
        braid = parse_braid("(x B^-1 ; 0, 0) s")
        assert braid == TorusBraid(X * B.inverse(), 0, 0, 1)

    def test_round_trip(self):
        rng = random.Random(8)
        for _ in range(200):
            a = random_braid(rng)
            assert parse_braid(format_braid(a)) == a

    def test_identity_text(self):
        assert format_braid(ONE) == "(1 ; 0, 0)"

    def test_errors(self):
        for bad in ("", "x ; 0, 0", "(x ; 0)", "(x ; a, b)", "(x ; 0, 0) ss"):
            with pytest.raises(ValueError):
                parse_braid(bad)
