import pytest

from ndautonomy.behavior import INF, SystemMatrix, characteristic_ideal, degree_of_autonomy
from ndautonomy.control import (
    SublatticeEmbedding,
    degree_by_restriction_oracle,
    generic_strength,
    interconnect,
    is_max_efficient,
    restrict,
    restrictions,
    strength,
)
from ndautonomy.errors import PreconditionError
from ndautonomy.genericity import SampleSpec, sample_matrix, trial_rng

from conftest import column, matrix

PLANT = column("s1 - 1")
CONTROLLER = column("s2 - 1")


class TestInterconnect:
    def test_section4(self):
        assert interconnect(PLANT, CONTROLLER) == column("s1 - 1", "s2 - 1")

    def test_empty_controller(self):
        assert interconnect(PLANT, SystemMatrix(2, 1, ())) == PLANT

    def test_self(self):
        M = column("s1^2 - s2", "s1*s2 + 3")
        assert characteristic_ideal(interconnect(M, M)) == characteristic_ideal(M)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            interconnect(PLANT, matrix([["s1", "s2"]]))


class TestStrength:
    def test_section4(self):
        r = strength(PLANT, CONTROLLER)
        assert (r.delta_plant, r.delta_controlled, r.strength) == (1, 2, 1)
        assert r.max_efficient

    def test_non_autonomous_plant(self):
        plant = matrix([["s1 - 2", "s2 + 1"]])
        ctrl = matrix([["s1 + 3", "s2 - 1"], ["s1*s2 - 1", "2*s1 + s2"]])
        r = strength(plant, ctrl)
        assert r.strength == 2 == r.generic_bound
        assert (r.delta_plant, r.delta_controlled) == (0, 2)

    def test_zero_plant(self):
        assert strength(SystemMatrix.identity(2, 1), CONTROLLER).strength == INF

    def test_duplicate_controller_is_not_efficient(self):
        r = strength(PLANT, PLANT)
        assert r.strength == 0 and not is_max_efficient(PLANT, PLANT)

    @pytest.mark.parametrize("args,expected", [((2, 2, 1, 2), 2), ((2, 1, 1, 1), 1), ((2, 1, 2, 2), INF),
                                               ((3, 2, 0, 1), 0), ((3, 1, 1, 1), 1)])
    def test_generic_bound(self, args, expected):
        assert generic_strength(*args) == expected

    @pytest.mark.parametrize("seed", range(6))
    def test_strength_is_nonnegative(self, seed):
        plant = sample_matrix(SampleSpec(n=2, k=1, rows=1, seed=seed), trial_rng(seed, 0, 0))
        ctrl = sample_matrix(SampleSpec(n=2, k=1, rows=1, seed=seed), trial_rng(seed, 0, 1))
        r = strength(plant, ctrl)
        assert r.strength == INF or r.strength >= 0
        if r.strength != INF and r.delta_plant >= 1:
            assert r.strength <= ctrl.l


class TestRestrict:
    def test_free_axis(self):
        R = restrict(PLANT, SublatticeEmbedding(2, (1,)))
        assert R.n == 1 and R.l == 0 and degree_of_autonomy(R) == 0

    def test_point(self):
        R = restrict(column("s1 - 1", "s2 - 1"), SublatticeEmbedding(2, (1,)))
        assert R == column("s1 - 1", n=1)

    def test_full(self):
        M = column("s1^2 - s2", "s2^2 - s1")
        R = restrict(M, SublatticeEmbedding(2, (0, 1)))
        assert characteristic_ideal(R) == characteristic_ideal(M)

    def test_matrix_rejected(self):
        with pytest.raises(PreconditionError):
            restrict(matrix([["s1", "s2"]]), SublatticeEmbedding(2, (0,)))

    def test_embedding_validation(self):
        with pytest.raises(ValueError):
            SublatticeEmbedding(3, (1, 0))
        with pytest.raises(IndexError):
            SublatticeEmbedding(2, (2,))

    def test_all_restrictions_of_non_autonomous_system_are_free(self):
        M = SystemMatrix(3, 1, ())
        for m in (1, 2, 3):
            assert all(R.l == 0 for _, R in restrictions(M, m))


class TestOracle:
    def test_single_law(self):
        assert degree_by_restriction_oracle(PLANT) == 1

    def test_section4(self):
        assert degree_by_restriction_oracle(column("s1 - 1", "s2 - 1")) == 2

    def test_unit(self):
        assert degree_by_restriction_oracle(column("s1")) == INF

    def test_matrix_rejected(self):
        with pytest.raises(PreconditionError):
            degree_by_restriction_oracle(matrix([["s1", "s2"]]))

    # dense degree-2 entries over n = 3 make zero-dimensional ideals with ~60
    # torus points; eliminating down to one variable then takes minutes
    @pytest.mark.parametrize("n,degree", [(2, 1), (2, 2), (3, 1)])
    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_codimension(self, n, degree, seed):
        spec = SampleSpec(n=n, k=1, rows=1 + seed % 3, degree=degree, density=0.6, seed=seed)
        M = sample_matrix(spec, trial_rng(seed, 0))
        assert degree_by_restriction_oracle(M) == degree_of_autonomy(M)

    def test_diagonal_line_in_3d(self):
        # V = {s1 = s2 = s3}: dimension 1, free along any single axis
        M = column("s1 - s2", "s2 - s3", n=3)
        assert degree_by_restriction_oracle(M) == degree_of_autonomy(M) == 2
