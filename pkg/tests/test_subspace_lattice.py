"""
Test cases for the lattice L(d) of subspaces and the orthogonal projectors.
"""
from fractions import Fraction

import allure
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from config.config import Config
from constants.paper_example import PAPER_EXAMPLE
from lattices.subspace_lattice import (
    Subspace,
    SubspaceLattice,
    absorbs,
    commutator,
    commutes,
    dim_formula_check,
    distributivity_counterexample,
    from_vectors,
    full_space,
    join,
    leq,
    meet,
    meet_demorgan,
    meet_nullspace,
    modularity_check,
    orthocomplement,
    projector,
    projector_from_basis,
    relative_orthocomplement,
    remark_counterexample,
    zero_space,
)
from numeric.exact_matrix import ExactMatrix
from numeric.gaussian import GaussianRational, gr
from tests.base_test import BaseTest
from utils.exceptions import PreconditionError, ShapeMismatchError

gaussian_ints = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def subspaces(draw, d):
    k = draw(st.integers(0, d))
    vectors = draw(st.lists(st.lists(gaussian_ints, min_size=d, max_size=d), min_size=k, max_size=k))
    return from_vectors(vectors, d)


@st.composite
def subspace_triples(draw):
    d = draw(st.integers(1, 4))
    return d, draw(subspaces(d)), draw(subspaces(d)), draw(subspaces(d))


def random_subspace(rng: np.random.Generator, d: int) -> Subspace:
    k = int(rng.integers(0, d + 1))
    vectors = [
        [GaussianRational(int(re), int(im)) for re, im in rng.integers(-3, 4, size=(d, 2))]
        for _ in range(k)
    ]
    return from_vectors(vectors, d)


def check_lattice_axioms(lattice: SubspaceLattice, x: Subspace, y: Subspace, z: Subspace, where: str = ""):
    assert (x | y) | z == x | (y | z), where
    assert (x & y) & z == x & (y & z), where
    assert x | y == y | x and x & y == y & x, where
    assert lattice.absorption_holds(x, y), where
    assert lattice.de_morgan_holds(x, y), where
    assert ~~x == x, where
    assert x & ~x == lattice.bottom(), where
    assert x | ~x == lattice.top(), where
    assert (x <= y) == (x & y == x), where
    assert dim_formula_check(x, y), where
    assert lattice.modularity_check(x & z, y, z), where


def e(i: int, d: int):
    return [1 if j == i else 0 for j in range(d)]


@allure.epic('Desargues Lattices')
@allure.feature('Subspace Lattice')
@allure.severity(allure.severity_level.NORMAL)
class TestLatticeOperations(BaseTest):
    """Join, meet, order and orthocomplement."""

    @allure.story('Canonical Form')
    @pytest.mark.smoke
    def test_equality_is_span_equality(self):
        a = from_vectors([[1, 1, 0], [1, -1, 0]], 3)
        b = from_vectors([[1, 0, 0], [0, "i", 0], [2, 3, 0]], 3)
        assert a == b
        assert hash(a) == hash(b)
        assert a.dim == 2

    @allure.story('Canonical Form')
    def test_bounds(self):
        assert zero_space(4).dim == 0
        assert full_space(4).dim == 4
        assert from_vectors([[0, 0, 0]], 3) == zero_space(3)

    @allure.story('Join and Meet')
    @pytest.mark.critical
    def test_paper_cross_lines_meet_at_center(self, paper_config):
        h, hp = paper_config.triangle, paper_config.triangle_prime
        lines = [h[i] | hp[i] for i in range(3)]
        center = lines[0] & lines[1]
        assert center.dim == 1
        assert center == from_vectors([PAPER_EXAMPLE.CENTER], 5)
        assert center == meet(lines[0], lines[1], method="demorgan")

    @allure.story('Join and Meet')
    def test_meet_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            meet(zero_space(2), zero_space(2), method="svd")

    @allure.story('Join and Meet')
    def test_ambient_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            join(zero_space(2), zero_space(3))

    @allure.story('Join and Meet')
    @pytest.mark.regression
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_meet_methods_agree(self, d):
        rng = np.random.default_rng(d)
        for _ in range(Config.PROPERTY_SAMPLES // 4):
            h1, h2 = random_subspace(rng, d), random_subspace(rng, d)
            assert meet_nullspace(h1, h2) == meet_demorgan(h1, h2)
            assert dim_formula_check(h1, h2)

    @allure.story('Orthocomplement')
    def test_orthocomplement(self):
        line = from_vectors([[1, "i", 0]], 3)
        perp = ~line
        assert perp == orthocomplement(line)
        assert perp.dim == 2
        assert perp.contains([1, "i", 0]) is False
        assert perp.contains(["i", 1, 0])
        assert perp.contains([0, 0, 1])

    @allure.story('Orthocomplement')
    def test_relative_orthocomplement(self, paper_config):
        plane = paper_config.plane
        point = paper_config.triangle[0]
        r = relative_orthocomplement(point, plane)
        assert r.dim == 2
        assert point & r == zero_space(5)
        assert point | r == plane
        with pytest.raises(PreconditionError):
            relative_orthocomplement(from_vectors([e(0, 5)], 5), plane)

    @allure.story('Lattice Axioms')
    @pytest.mark.regression
    @given(subspace_triples())
    def test_axioms(self, instance):
        d, x, y, z = instance
        check_lattice_axioms(SubspaceLattice(d), x, y, z)

    @allure.story('Lattice Axioms')
    @pytest.mark.slow
    @pytest.mark.timeout(Config.SLOW_TIMEOUT)
    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_axioms_full_size(self, d):
        rng = np.random.default_rng(1000 + d)
        lattice = SubspaceLattice(d)
        for sample in range(Config.LATTICE_ACCEPTANCE_SAMPLES):
            x, y, z = (random_subspace(rng, d) for _ in range(3))
            check_lattice_axioms(lattice, x, y, z, f"d={d} sample={sample}")

    @allure.story('Lattice Axioms')
    def test_modularity_precondition(self):
        x, y, _ = distributivity_counterexample(3)
        with pytest.raises(PreconditionError):
            modularity_check(x, y, y)

    @allure.story('Lattice Axioms')
    @pytest.mark.critical
    def test_distributivity_fails(self):
        x, y, z = distributivity_counterexample(2)
        lattice = SubspaceLattice(2)
        assert x & (y | z) == x
        assert (x & y) | (x & z) == zero_space(2)
        assert not lattice.is_distributive_triple(x, y, z)

    @allure.story('Order')
    def test_leq(self):
        line = from_vectors([e(0, 3), e(1, 3)], 3)
        point = from_vectors([[1, 1, 0]], 3)
        assert leq(point, line) and point <= line
        assert not leq(line, point)


@allure.epic('Desargues Lattices')
@allure.feature('Subspace Lattice')
@allure.severity(allure.severity_level.NORMAL)
class TestProjectors(BaseTest):
    """Projector formula, its exact laws and commutation."""

    @allure.story('Projector Formula')
    @pytest.mark.critical
    def test_meet_projector_entries(self, paper_config):
        h, hp = paper_config.triangle, paper_config.triangle_prime
        p = projector((h[0] | hp[0]) & (h[1] | hp[1]))
        assert p.matrix[1, 1] == gr(Fraction(1, 5))
        assert p.matrix[1, 3] == gr(Fraction(2, 5))
        assert p.matrix[3, 3] == gr(Fraction(4, 5))
        assert p.to_float().allclose(PAPER_EXAMPLE.PI_H1_MEET_H2, atol=5e-5)

    @allure.story('Projector Formula')
    def test_basis_independence(self):
        canonical = projector(from_vectors(PAPER_EXAMPLE.H3_BASIS, 5))
        explicit = projector_from_basis(PAPER_EXAMPLE.H3_BASIS, 5)
        assert canonical.matrix == explicit.matrix
        assert canonical.to_float().allclose(PAPER_EXAMPLE.PI_H3, atol=5e-5)

    @allure.story('Projector Formula')
    def test_bottom_and_top(self):
        assert projector(zero_space(3)).matrix == ExactMatrix.zeros(3, 3)
        assert projector(full_space(3)).matrix == ExactMatrix.identity(3)

    @allure.story('Projector Laws')
    @pytest.mark.regression
    @given(st.integers(1, 4).flatmap(lambda d: subspaces(d)))
    def test_projector_laws(self, h):
        p = projector(h)
        assert p.is_valid()
        assert p.matrix.trace() == h.dim
        complement = projector(~h)
        assert p.matrix + complement.matrix == ExactMatrix.identity(h.ambient_dim)

    @allure.story('Commutation')
    @given(subspace_triples())
    def test_absorption_iff_order(self, instance):
        _, x, y, _ = instance
        assert absorbs(projector(x), projector(y)) == (y <= x)
        if y <= x:
            assert commutes(projector(x), projector(y))

    @allure.story('Commutation')
    def test_commuting_without_absorption(self):
        p, q = remark_counterexample(3)
        assert commutes(p, q)
        assert commutator(p, q).is_zero()
        assert not absorbs(p, q)
        assert not absorbs(q, p)

    @allure.story('Commutation')
    def test_non_commuting_pair(self):
        p = projector(from_vectors([[1, 0]], 2))
        q = projector(from_vectors([[1, 1]], 2))
        assert not commutes(p, q)
