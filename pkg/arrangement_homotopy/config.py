"""
Runtime configuration for the arrangement homotopy toolkit.

Settings come from environment variables so the same defaults apply to the
CLI, the self-test runner and library use.
"""
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigurationError

DEFAULT_CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def _int_setting(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got '{raw}'")
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Tunable limits and locations.

    Attributes:
        max_degree (int): degree bound N for minimal models
        generator_cap (int): maximum number of minimal-model generators
        max_atoms (int): largest arrangement whose lattice closure is enumerated
        selftest_degree (int): degree bound used by the self-test runner
        corpus_dir (Path): directory holding the bundled arrangement files
        log_level (str): logging level name
    """
    max_degree: int = 12
    generator_cap: int = 5000
    max_atoms: int = 24
    selftest_degree: int = 8
    corpus_dir: Path = DEFAULT_CORPUS_DIR
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ARRANGEMENT_* environment variables."""
        log_level = os.getenv("ARRANGEMENT_LOG_LEVEL", "INFO").upper()
        if log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"ARRANGEMENT_LOG_LEVEL has unknown level '{log_level}'")
        corpus = os.getenv("ARRANGEMENT_CORPUS_DIR")
        return cls(
            max_degree=_int_setting("ARRANGEMENT_MAX_DEGREE", 12, 2),
            generator_cap=_int_setting("ARRANGEMENT_GENERATOR_CAP", 5000, 1),
            max_atoms=_int_setting("ARRANGEMENT_MAX_ATOMS", 24, 1),
            selftest_degree=_int_setting("ARRANGEMENT_SELFTEST_DEGREE", 8, 2),
            corpus_dir=Path(corpus) if corpus else DEFAULT_CORPUS_DIR,
            log_level=log_level,
        )
