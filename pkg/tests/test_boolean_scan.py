"""
Test cases for the exhaustive Boolean scan.
"""
import allure
import pytest

from lattices.boolean_lattice import GroundSet, antecedent, consequent, derive
from lattices.boolean_scan import ScanReport, _partition, evaluate_bits, exhaustive_scan
from tests.base_test import BaseTest
from utils.exceptions import PreconditionError


def distinct_triplets(n: int) -> int:
    m = 1 << n
    return m * (m - 1) * (m - 2)


@allure.epic('Desargues Lattices')
@allure.feature('Boolean Scan')
@allure.severity(allure.severity_level.NORMAL)
class TestExhaustiveScan(BaseTest):
    """Counts, violations and the converse witness over small ground sets."""

    @allure.story('Counts')
    @pytest.mark.smoke
    def test_single_element(self):
        report = exhaustive_scan(GroundSet(1))
        assert report.total == 0
        assert report.violations == 0
        assert report.converse_counterexample is None

    @allure.story('Counts')
    @pytest.mark.critical
    @pytest.mark.parametrize("n", [2, 3])
    def test_no_violations(self, n):
        report = exhaustive_scan(GroundSet(n))
        assert report.total == distinct_triplets(n) ** 2
        assert report.violations == 0
        assert report.first_violation is None
        assert report.antecedent_true <= report.consequent_true <= report.total

    @allure.story('Converse')
    @pytest.mark.critical
    def test_converse_witness(self):
        report = exhaustive_scan(GroundSet(2))
        assert report.converse_counterexample is not None
        with allure.step("Witness is a valid input with a false antecedent and a true consequent"):
            data = report.as_input(report.converse_counterexample)
            data.validate()
            d = derive(data)
            assert not antecedent(d)
            assert consequent(d)

    @allure.story('Parallel')
    def test_parallel_matches_serial(self):
        serial = exhaustive_scan(GroundSet(2))
        parallel = exhaustive_scan(GroundSet(2), workers=3)
        assert parallel == serial

    @allure.story('Parallel')
    def test_partition_preserves_order(self):
        chunks = _partition(list(range(16)), 5)
        assert len(chunks) == 5
        assert [v for c in chunks for v in c] == list(range(16))

    @allure.story('Merge')
    def test_merge_keeps_earliest_witness(self):
        ground = GroundSet(2)
        first = ScanReport(ground, total=3, antecedent_true=1, consequent_true=2,
                           converse_counterexample=(1, 3, 0, 1, 2, 0))
        second = ScanReport(ground, total=4, antecedent_true=2, consequent_true=4,
                            converse_counterexample=(2, 3, 0, 1, 2, 0))
        merged = first.merge(second)
        assert merged.total == 7
        assert merged.consequent_true == 6
        assert merged.converse_counterexample == (1, 3, 0, 1, 2, 0)

    @allure.story('Bounds')
    def test_too_large(self):
        with pytest.raises(PreconditionError):
            exhaustive_scan(GroundSet(5))

    @allure.story('Bit Evaluation')
    def test_evaluate_bits_matches_derive(self):
        report = exhaustive_scan(GroundSet(2))
        data = report.as_input(report.converse_counterexample)
        assert evaluate_bits(*report.converse_counterexample) == (False, True)
        d = derive(data)
        assert evaluate_bits(*(s.bits for s in data.a + data.a_prime)) == (antecedent(d), consequent(d))

    @allure.story('Counts')
    @pytest.mark.slow
    def test_four_elements(self):
        report = exhaustive_scan(GroundSet(4), workers=4)
        assert report.total == distinct_triplets(4) ** 2
        assert report.violations == 0
