"""Configuration management for the simplicial tree toolkit."""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from sinks.jsonl_sink import JsonLinesSink
from sinks.stdout_sink import StdoutSink
from sinks.verdict_sink import VerdictSink


@dataclass
class Config:
    """
    Global configuration object for certification runs and conjecture searches.

    This class loads configuration from environment variables (and a `.env`
    file, if present), sets up logging and initializes the verdict sink used by
    counterexample searches.

    Attributes:
        log_level (int): `logging` level applied to the root logger.
        max_vertices (int): Largest vertex count accepted from a facet-list file.
        max_dimension (int): Largest dimension accepted from a facet-list file.
        permutation_budget (int): Most labelling steps `canonical_form` may take.
        search_workers (int): Worker processes for counterexample searches.
        sink (VerdictSink): Collector for counterexample verdicts.
        near_miss_path (Optional[str]): JSON-lines file for complexes whose
            acyclic-top-count premises hold, if set.

    Example:
        >>> config = Config.load()
        >>> print(config.max_vertices)
        >>> config.sink.add_verdicts(found)
    """

    log_level: int = logging.WARNING
    max_vertices: int = 20
    max_dimension: int = 6
    permutation_budget: int = 362880
    search_workers: int = 1
    sink: Optional[VerdictSink] = None
    near_miss_path: Optional[str] = None

    def __post_init__(self):
        if self.sink is None:
            self.sink = StdoutSink()

    @staticmethod
    def _get_required_env_var(key: str) -> str:
        """
        Retrieve a required environment variable or raise an error.

        Args:
            key (str): The environment variable name.

        Returns:
            str: The value of the environment variable.

        Raises:
            ValueError: If the variable is not defined.
        """
        value = os.getenv(key)
        if not value:
            raise ValueError(f"{key} environment variable is required.")
        return value

    @staticmethod
    def _get_int_env_var(key: str, default: int, minimum: int = 1) -> int:
        """
        Retrieve an optional integer environment variable.

        Raises:
            ValueError: If the value is not an integer or is below `minimum`.
        """
        raw = os.getenv(key)
        if not raw:
            return default
        try:
            value = int(raw)
        except ValueError as e:
            raise ValueError(f"{key} must be an integer, got '{raw}'.") from e
        if value < minimum:
            raise ValueError(f"{key} must be at least {minimum}, got {value}.")
        return value

    @staticmethod
    def _parse_log_level(log_level_name: str) -> int:
        """
        Convert a string log level into a `logging` module constant.

        Args:
            log_level_name (str): One of DEBUG, INFO, WARNING, ERROR, CRITICAL.

        Returns:
            int: Corresponding `logging` level.

        Raises:
            ValueError: If an invalid level is provided.
        """
        log_levels = {
            "DEBUG": logging.DEBUG,
            "INFO": logging.INFO,
            "WARNING": logging.WARNING,
            "ERROR": logging.ERROR,
            "CRITICAL": logging.CRITICAL,
        }
        if log_level_name not in log_levels:
            raise ValueError(
                f"Invalid LOG_LEVEL: '{log_level_name}'. "
                f"Must be one of: {', '.join(log_levels.keys())}"
            )
        return log_levels[log_level_name]

    @staticmethod
    def _init_sink(sink_type: str) -> VerdictSink:
        """
        Factory method to initialize the verdict sink from environment variables.

        Args:
            sink_type (str): Sink named by `VERDICT_SINK` (STDOUT or JSONL).

        Returns:
            VerdictSink: Initialized sink.

        Raises:
            ValueError: If the sink type is unsupported or its path is missing.
        """
        match sink_type.upper():
            case "STDOUT":
                return StdoutSink()
            case "JSONL":
                return JsonLinesSink(Config._get_required_env_var("VERDICT_PATH"))
            case _:
                raise ValueError(f"Unsupported VERDICT_SINK '{sink_type}'")

    @staticmethod
    def load() -> "Config":
        """
        Load application settings from `.env` variables into a typed config object.

        Every variable is optional. Logging goes to stderr so that command
        output on stdout stays machine-readable.

        Returns:
            Config: A fully-initialized configuration object.

        Raises:
            ValueError: If an environment variable is malformed.
        """
        load_dotenv()

        # Logging setup
        log_level_name = os.getenv("LOG_LEVEL", "WARNING").upper()
        log_level = Config._parse_log_level(log_level_name)
        logging.basicConfig(
            level=log_level,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        logging.getLogger().setLevel(log_level)
        logger = logging.getLogger(__name__)
        logger.debug("Logging initialized at level: %s", log_level_name)

        # Desk-scale limits
        get_int = Config._get_int_env_var
        max_vertices = get_int("MAX_VERTICES", 20)
        max_dimension = get_int("MAX_DIMENSION", 6)
        permutation_budget = get_int("PERMUTATION_BUDGET", 362880)
        search_workers = get_int("SEARCH_WORKERS", 1)

        # Verdict collection
        sink = Config._init_sink(os.getenv("VERDICT_SINK", "STDOUT"))
        near_miss_path = os.getenv("NEAR_MISS_PATH") or None

        return Config(
            log_level=log_level,
            max_vertices=max_vertices,
            max_dimension=max_dimension,
            permutation_budget=permutation_budget,
            search_workers=search_workers,
            sink=sink,
            near_miss_path=near_miss_path,
        )
