"""
Logging configuration for the toolkit.
"""
import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler

from config.config import Config


class Logger:
    """Logger configuration class."""

    @staticmethod
    def setup_logger(name: str = "desargues") -> logging.Logger:
        """
        Set up and configure logger with a console handler and, optionally, a file handler.

        The console handler writes to standard error so that command reports on
        standard output stay machine readable.

        Args:
            name: Name of the logger

        Returns:
            logging.Logger: Configured logger instance
        """
        logger = logging.getLogger(name)
        if logger.handlers:
            return logger
        logger.setLevel(logging.DEBUG)
        logger.propagate = False

        console_formatter = logging.Formatter('%(levelname)s - %(message)s')
        console_handler = logging.StreamHandler()
        console_handler.setLevel(getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO))
        console_handler.setFormatter(console_formatter)
        logger.addHandler(console_handler)

        if Config.is_file_logging():
            os.makedirs(Config.LOG_DIR, exist_ok=True)
            file_formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            )
            log_file = os.path.join(
                Config.LOG_DIR,
                f"run_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
            )
            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=1024 * 1024,  # 1MB
                backupCount=5
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(file_formatter)
            logger.addHandler(file_handler)

        return logger

    @staticmethod
    def set_console_level(level: str, name: str = "desargues") -> None:
        """
        Change the console verbosity of an already configured logger.

        Args:
            level: Level name such as "DEBUG" or "WARNING"
            name: Name of the logger
        """
        for handler in logging.getLogger(name).handlers:
            if not isinstance(handler, RotatingFileHandler):
                handler.setLevel(getattr(logging, level.upper(), logging.INFO))


# Create default logger instance
logger = Logger.setup_logger()
