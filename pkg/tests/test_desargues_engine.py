"""
Test cases for Desargues configurations in L(d).
"""
from itertools import permutations

import allure
import pytest

from config.config import Config
from constants.paper_example import PAPER_EXAMPLE
from desargues.engine import (
    DesarguesConfig,
    PointTriple,
    collinear,
    concurrent,
    derive_config,
    desargues_check,
    dual_concurrency,
    experiment_projectors,
    is_line_triangle,
    is_point_triangle,
    membership_coefficients,
    permute,
    validate_config,
)
from desargues.generators import generate_desarguesian, generate_generic
from lattices.subspace_lattice import (
    commutes,
    from_vectors,
    projector,
    proportional,
    relative_orthocomplement,
)
from numeric.gaussian import GaussianRational
from tests.base_test import BaseTest
from utils.exceptions import DegenerateConfigError, InvalidConfigError, PreconditionError
from utils.serialization import config_from_json

T, TP = PAPER_EXAMPLE.TRIANGLE, PAPER_EXAMPLE.TRIANGLE_PRIME


def check_generated_pair(seed: int, d: int):
    """Concurrency, collinearity, dual concurrency and absorption agree on both generated kinds."""
    pairs = ((generate_desarguesian(seed, d), True), (generate_generic(seed, d), False))
    for config, expect_concurrent in pairs:
        derived = derive_config(config)
        is_concurrent, center = concurrent(derived)
        is_collinear, axis = collinear(derived)
        assert is_concurrent == is_collinear, f"seed={seed} d={d}"
        if expect_concurrent:
            assert is_concurrent and center.dim == 1 and axis.dim == 2
        assert dual_concurrency(derived) == is_concurrent
        proj = experiment_projectors(derived)
        lhs = proj["Pi(H3)"].matrix @ proj["Pi(H1^H2)"].matrix == proj["Pi(H1^H2)"].matrix
        rhs = proj["Pi(h1vh2)"].matrix @ proj["Pi(h3)"].matrix == proj["Pi(h3)"].matrix
        assert lhs == rhs == is_concurrent, f"seed={seed} d={d}"
        if lhs:
            assert commutes(proj["Pi(H3)"], proj["Pi(H1^H2)"])


@allure.epic('Desargues Lattices')
@allure.feature('Desargues Engine')
@allure.severity(allure.severity_level.CRITICAL)
class TestTriangles(BaseTest):
    """Point and line triangles, configuration invariants."""

    @allure.story('Triangles')
    @pytest.mark.smoke
    def test_paper_triangles(self, paper_config):
        assert is_point_triangle(paper_config.triangle)
        assert is_point_triangle(paper_config.triangle_prime)

    @allure.story('Triangles')
    def test_dependent_points(self):
        dependent = PointTriple.from_vectors([T[0], T[1], ["0", "2", "1+i", "4", "0"]], 5)
        assert not is_point_triangle(dependent)

    @allure.story('Triangles')
    def test_repeated_point_is_rejected(self):
        with pytest.raises(InvalidConfigError):
            is_point_triangle(PointTriple.from_vectors([T[0], T[0], T[1]], 5))

    @allure.story('Triangles')
    def test_line_triangles(self, paper_config):
        cross_lines = derive_config(paper_config).cross_lines
        assert not is_line_triangle(*cross_lines)
        e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        l1, l2, l3 = (from_vectors([e[i], e[j]], 3) for i, j in ((0, 1), (1, 2), (0, 2)))
        assert is_line_triangle(l1, l2, l3)
        with pytest.raises(PreconditionError):
            is_line_triangle(l1, l1, l3)
        with pytest.raises(PreconditionError):
            is_line_triangle(l1, l2, from_vectors([e[0]], 3))

    @allure.story('Validation')
    @pytest.mark.critical
    def test_validate_paper_config(self, paper_config):
        result = validate_config(paper_config)
        assert result.ok
        assert paper_config.plane.dim == 3

    @allure.story('Validation')
    def test_non_coplanar(self):
        config = config_from_json(self.load_test_data("noncoplanar_config.json"))
        result = validate_config(config)
        assert not result
        assert result.invariant == "coplanar"

    @allure.story('Validation')
    def test_collinear_triangle(self):
        config = DesarguesConfig.from_vectors(5, [T[0], T[1], ["0", "2", "1+i", "4", "0"]], TP)
        result = validate_config(config)
        assert not result
        assert result.invariant == "triangle"

    @allure.story('Validation')
    def test_shared_vertex_is_accepted(self):
        config = DesarguesConfig.from_vectors(5, T, [TP[0], T[0], TP[2]])
        assert validate_config(config)


@allure.epic('Desargues Lattices')
@allure.feature('Desargues Engine')
@allure.severity(allure.severity_level.CRITICAL)
class TestDerivedConfig(BaseTest):
    """Sides, cross points, cross lines and their degeneracies."""

    @allure.story('Cross Points')
    @pytest.mark.critical
    def test_paper_cross_points(self, paper_config):
        derived = derive_config(paper_config)
        for point, expected in zip(derived.cross_points, PAPER_EXAMPLE.CROSS_POINTS):
            assert point.dim == 1
            assert proportional(point.ray(), expected)
        assert all(line.dim == 2 for line in derived.cross_lines)
        assert all(side.dim == 2 for side in derived.sides.values())

    @allure.story('Degeneracy')
    def test_shared_vertex_degenerates(self):
        config = DesarguesConfig.from_vectors(5, T, [T[0], TP[1], TP[2]])
        with pytest.raises(DegenerateConfigError) as err:
            derive_config(config)
        assert err.value.index == 1

    @allure.story('Degeneracy')
    def test_invalid_config_is_not_derived(self):
        config = config_from_json(self.load_test_data("noncoplanar_config.json"))
        with pytest.raises(InvalidConfigError):
            derive_config(config)

    @allure.story('Membership')
    def test_center_on_every_cross_line(self):
        for i, expected in enumerate(PAPER_EXAMPLE.CROSS_LINE_COEFFICIENTS):
            a, b = membership_coefficients(T[i], TP[i], PAPER_EXAMPLE.CENTER)
            assert (a, b) == tuple(GaussianRational.coerce(x) for x in expected)
        assert membership_coefficients(T[0], TP[0], T[2]) is None

    @allure.story('Duality')
    def test_relative_orthocomplement_projectors(self, paper_config):
        plane = paper_config.plane
        for h in list(paper_config.triangle) + list(paper_config.triangle_prime):
            dual = relative_orthocomplement(h, plane)
            assert dual.dim == 2
            assert projector(h).matrix + projector(dual).matrix == projector(plane).matrix
        derived = derive_config(paper_config)
        assert all(line.dim == 2 for line in derived.dual_lines + derived.dual_lines_prime)


@allure.epic('Desargues Lattices')
@allure.feature('Desargues Engine')
@allure.severity(allure.severity_level.CRITICAL)
class TestDesarguesCheck(BaseTest):
    """Concurrency, collinearity and the projector relations."""

    @allure.story('Worked Example')
    @pytest.mark.critical
    def test_paper_report(self, paper_config):
        report = desargues_check(paper_config)
        with allure.step("Concurrent cross lines and collinear cross points"):
            assert report.concurrent and report.collinear and report.equivalence_ok
            assert proportional(report.center.ray(), PAPER_EXAMPLE.CENTER)
            assert report.axis.dim == 2
        with allure.step("Projector relations"):
            assert report.absorption_lhs and report.absorption_rhs
            assert report.commutes_lhs and report.commutes_rhs
            assert report.dual_concurrent

    @allure.story('Worked Example')
    def test_center_is_a_vertex(self, paper_config):
        center = concurrent(derive_config(paper_config))[1]
        assert center == paper_config.triangle[1]

    @allure.story('Equivalence')
    @pytest.mark.regression
    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_generated_configs(self, d):
        for seed in range(Config.DESARGUES_SAMPLES // 4):
            check_generated_pair(seed, d)

    @allure.story('Equivalence')
    @pytest.mark.slow
    @pytest.mark.timeout(Config.SLOW_TIMEOUT)
    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_generated_configs_full_size(self, d):
        for seed in range(Config.DESARGUES_ACCEPTANCE_SEEDS):
            check_generated_pair(seed, d)

    @allure.story('Permutation Invariance')
    @pytest.mark.parametrize("order", list(permutations(range(3))))
    def test_permutations(self, paper_config, order):
        generic = generate_generic(11, 4)
        for config in (paper_config, generic):
            base = desargues_check(config)
            relabeled = desargues_check(permute(config, order))
            assert (relabeled.concurrent, relabeled.collinear, relabeled.equivalence_ok) == \
                (base.concurrent, base.collinear, base.equivalence_ok)

    @allure.story('Permutation Invariance')
    def test_bad_permutation(self, paper_config):
        with pytest.raises(PreconditionError):
            permute(paper_config, (0, 0, 1))
