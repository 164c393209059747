"""
Test cases for the self-checking worked example.
"""
from dataclasses import replace

import allure
import numpy as np
import pytest

from constants.paper_example import PAPER_EXAMPLE
from constants.tolerances import TOLERANCES
from desargues.paper_example import _max_deviation, run_paper_example
from tests.base_test import BaseTest


def failed_checks(result):
    return [c.name for c in result.checks if not c.passed]


@allure.epic('Desargues Lattices')
@allure.feature('Worked Example')
@allure.severity(allure.severity_level.CRITICAL)
class TestPaperExample(BaseTest):
    """Every quantity of the H(5) example is recomputed."""

    @allure.story('Pipeline')
    @pytest.mark.smoke
    @pytest.mark.critical
    def test_all_checks_pass(self):
        result = run_paper_example()
        self.attach_json([{"name": c.name, "passed": c.passed, "detail": c.detail} for c in result.checks], "checks")
        assert result.all_passed, f"failed: {failed_checks(result)}"
        assert len(result.checks) > 30
        assert set(result.projectors) == {"Pi(H3)", "Pi(H1^H2)", "Pi(h3)", "Pi(h1vh2)"}
        assert result.pair is not None

    @allure.story('Pipeline')
    def test_join_projector_entry(self):
        proj = run_paper_example().projectors["Pi(h1vh2)"]
        assert proj.to_float().array[2, 2].real == pytest.approx(0.9831, abs=TOLERANCES.PROJECTOR_TABLE)
        assert proj.source_dim == 2

    @allure.story('Pipeline')
    @pytest.mark.regression
    def test_every_table_within_rounding(self):
        tables = {c.name: c for c in run_paper_example().checks if c.name.endswith(" table")}
        assert set(tables) == {f"{label} table" for label in ("Pi(H3)", "Pi(H1^H2)", "Pi(h3)", "Pi(h1vh2)")}
        for name, check in tables.items():
            assert check.passed, f"{name}: {check.detail}"

    @allure.story('Perturbations')
    def test_table_deviation_is_per_component(self):
        # -1/7 printed as -0.1429 in both parts: modulus gap 6.1e-5, per-part gap 4.3e-5
        assert _max_deviation(np.array([[complex(-1 / 7, -1 / 7)]]), [[-0.1429 - 0.1429j]]) < 5e-5
        assert _max_deviation(np.array([[0.5 + 0j]]), [[0.5 + 2e-4j]]) == pytest.approx(2e-4)

    @allure.story('Perturbations')
    def test_wrong_probability_is_reported(self):
        result = run_paper_example(replace(PAPER_EXAMPLE, P1=0.5))
        assert not result.all_passed
        assert failed_checks(result) == ["p1"]

    @allure.story('Perturbations')
    def test_wrong_table_is_reported(self):
        table = tuple(tuple(x + 0.01 for x in row) for row in PAPER_EXAMPLE.PI_H3)
        result = run_paper_example(replace(PAPER_EXAMPLE, PI_H3=table))
        assert failed_checks(result) == ["Pi(H3) table"]

    @allure.story('Perturbations')
    def test_non_coplanar_input_stops_early(self):
        prime = (PAPER_EXAMPLE.TRIANGLE_PRIME[0], PAPER_EXAMPLE.TRIANGLE_PRIME[1], ["1", "0", "0", "0", "0"])
        result = run_paper_example(replace(PAPER_EXAMPLE, TRIANGLE_PRIME=prime))
        assert not result.all_passed
        assert result.checks[-1].name == "coplanar triangles"
        assert result.pair is None
        assert result.projectors == {}

    @allure.story('Perturbations')
    def test_degenerate_input_stops_early(self):
        t, tp = PAPER_EXAMPLE.TRIANGLE, PAPER_EXAMPLE.TRIANGLE_PRIME
        result = run_paper_example(replace(PAPER_EXAMPLE, TRIANGLE_PRIME=(t[0], tp[1], tp[2])))
        assert failed_checks(result) == ["non-degenerate configuration"]

    @allure.story('Perturbations')
    def test_orthogonal_state_is_reported(self):
        state = (0.0, 0.8944271909999159, 0.0, -0.4472135954999579, 0.0)
        result = run_paper_example(replace(PAPER_EXAMPLE, STATE=state))
        assert failed_checks(result) == ["experiments complete"]
        assert result.pair is None
        assert result.projectors
