"""
Configuration settings for the Desargues lattices toolkit.
"""
import os
from dataclasses import dataclass
from typing import Dict

from dotenv import load_dotenv

load_dotenv()


@dataclass
class EnvironmentConfig:
    """Environment-specific configuration."""
    log_dir: str = "logs"
    log_level: str = "INFO"
    log_to_file: bool = False
    report_dir: str = "reports"
    allure_results_dir: str = "allure-results"
    output_format: str = "json"
    scan_workers: int = 1
    generator_max_attempts: int = 1000
    property_samples: int = 200  # random instances per dimension in lattice suites
    desargues_samples: int = 200
    correlation_configs: int = 20
    correlation_states: int = 20
    lattice_acceptance_samples: int = 1000  # per dimension in the slow lattice-axiom suite
    desargues_acceptance_seeds: int = 200
    slow_timeout: int = 3600


class Config:
    """Configuration manager for different environments."""

    ENVIRONMENTS: Dict[str, EnvironmentConfig] = {
        'dev': EnvironmentConfig(
            log_to_file=False,
            property_samples=200,
        ),
        'ci': EnvironmentConfig(
            log_to_file=True,
            scan_workers=2,
            property_samples=1000,
        ),
        'full': EnvironmentConfig(
            log_level="DEBUG",
            log_to_file=True,
            scan_workers=4,
            property_samples=1000,
        ),
    }

    CURRENT_ENV = os.getenv('DESARGUES_ENV', 'dev')
    config = ENVIRONMENTS.get(CURRENT_ENV, ENVIRONMENTS['dev'])

    LOG_DIR = os.getenv('DESARGUES_LOG_DIR', config.log_dir)
    LOG_LEVEL = os.getenv('DESARGUES_LOG_LEVEL', config.log_level)
    LOG_TO_FILE = config.log_to_file
    REPORT_DIR = config.report_dir
    ALLURE_RESULTS_DIR = config.allure_results_dir
    OUTPUT_FORMAT = config.output_format
    SCAN_WORKERS = int(os.getenv('DESARGUES_SCAN_WORKERS', config.scan_workers))
    GENERATOR_MAX_ATTEMPTS = config.generator_max_attempts
    PROPERTY_SAMPLES = int(os.getenv('DESARGUES_PROPERTY_SAMPLES', config.property_samples))
    DESARGUES_SAMPLES = config.desargues_samples
    CORRELATION_CONFIGS = config.correlation_configs
    CORRELATION_STATES = config.correlation_states
    LATTICE_ACCEPTANCE_SAMPLES = int(os.getenv('DESARGUES_LATTICE_ACCEPTANCE_SAMPLES', config.lattice_acceptance_samples))
    DESARGUES_ACCEPTANCE_SEEDS = config.desargues_acceptance_seeds
    SLOW_TIMEOUT = config.slow_timeout

    @classmethod
    def is_file_logging(cls) -> bool:
        """Check if log records are also written to a rotating file."""
        return cls.LOG_TO_FILE

    @classmethod
    def get_allure_environment_properties(cls) -> dict:
        """Get environment properties for Allure reporting."""
        return {
            'Environment': cls.CURRENT_ENV,
            'Log Level': cls.LOG_LEVEL,
            'Scan Workers': str(cls.SCAN_WORKERS),
            'Property Samples': str(cls.PROPERTY_SAMPLES),
            'Desargues Samples': str(cls.DESARGUES_SAMPLES),
        }
