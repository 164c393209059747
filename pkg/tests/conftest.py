"""
PyTest fixtures for the test suites.
"""
import os

import allure
import pytest
from hypothesis import HealthCheck, settings

from config.config import Config
from constants.paper_example import PAPER_EXAMPLE
from desargues.engine import DesarguesConfig
from desargues.measurement import StateVector
from lattices.boolean_lattice import BooleanDesarguesInput
from utils.logger import logger
from utils.serialization import (
    boolean_input_from_json,
    boolean_input_to_json,
    config_from_json,
    config_to_json,
    dumps,
    load_json,
)
from tests.base_test import TEST_DATA_DIR

# Exact elimination has no predictable per-example runtime
settings.register_profile(
    "desargues",
    deadline=None,
    max_examples=Config.PROPERTY_SAMPLES,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("desargues")


def write_allure_environment():
    env = Config.get_allure_environment_properties()
    os.makedirs(Config.ALLURE_RESULTS_DIR, exist_ok=True)
    with open(os.path.join(Config.ALLURE_RESULTS_DIR, "environment.properties"), "w") as f:
        for k, v in env.items():
            f.write(f"{k}={v}\n")


# Pytest hook to write environment.properties before session starts
@pytest.hookimpl(tryfirst=True)
def pytest_sessionstart(session):
    write_allure_environment()


@pytest.fixture(scope="session")
def paper_config() -> DesarguesConfig:
    """The worked H(5) configuration, loaded from test_data."""
    return config_from_json(load_json(TEST_DATA_DIR / "paper_config.json"))


@pytest.fixture(scope="session")
def paper_state() -> StateVector:
    return StateVector.from_amplitudes(PAPER_EXAMPLE.STATE)


@pytest.fixture(scope="session")
def boolean_example() -> BooleanDesarguesInput:
    """Ground {1,2,3}, A = ({1},{2},{3}), A' = ({1,3},{2,3},{})."""
    return boolean_input_from_json(load_json(TEST_DATA_DIR / "paper_boolean_example.json"))


def _serializable_instance(item):
    # A configuration or Boolean input among the test's arguments
    for arg in getattr(item, "funcargs", {}).values():
        if isinstance(arg, DesarguesConfig):
            return config_to_json(arg)
        if isinstance(arg, BooleanDesarguesInput):
            return boolean_input_to_json(arg)
    return None


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # Execute all other hooks to obtain the report object
    outcome = yield
    rep = outcome.get_result()
    if rep.when == 'call' and rep.failed:
        document = _serializable_instance(item)
        if document is not None:
            try:
                allure.attach(
                    dumps(document, pretty=True),
                    name=f"{item.name}_instance",
                    attachment_type=allure.attachment_type.JSON
                )
            except Exception as e:
                logger.error(f"Failed to attach failing instance to Allure: {e}")
