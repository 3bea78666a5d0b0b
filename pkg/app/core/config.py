import logging
import os
import sys

from dotenv import load_dotenv

load_dotenv()


class Settings:
    APP_NAME: str = os.getenv("APP_NAME", "Colored Permutation Statistics")
    DEBUG: bool = os.getenv("DEBUG", "False") == "True"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Enumeration limits
    ENUMERATION_CAP: int = int(os.getenv("ENUMERATION_CAP", "1000000"))
    BFS_CAP: int = int(os.getenv("BFS_CAP", "100000"))
    BOUNDS_CAP: int = int(os.getenv("BOUNDS_CAP", "12"))

    # Worker processes used by the theorem checker
    JOBS: int = int(os.getenv("JOBS", "1"))


settings = Settings()


def configure_logging(level: str = None):
    """
    Configure the root logger once. Records go to stderr so that command output on stdout stays clean.
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        stream=sys.stderr,
        format="%(levelname)s: %(message)s",
    )
