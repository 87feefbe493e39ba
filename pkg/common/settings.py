"""Class to contain setters, getters & parameters for a CLI run"""

from pathlib import Path
from typing import Final

from common.constants import DEFAULT_TRIALS

DEFAULT_SEED: Final[int] = 0
DEFAULT_WORKERS: Final[int] = 1
DEFAULT_FORMAT: Final[str] = "json"
DEFAULT_LOG_DIR: Final[str] = "logs"
DEFAULT_SUITE_CONFIG: Final[str] = str(Path(__file__).resolve().parent.parent / "cli" / "data" / "suites.yaml")
OUTPUT_FORMATS: Final[tuple[str, str]] = ("json", "table")


class RunSettings:
    """
    Class to contain the parameters of one CLI invocation

    Attributes
    ----------
    __seed : int
        Master seed for anything random (instance sampling, Monte Carlo)
    __trials : int
        Number of Monte Carlo trials
    __workers : int
        Number of worker processes for Monte Carlo runs
    __output_format : str
        Either "json" or "table"
    __strict_draw : bool
        Use the literal sigma/N realization draw instead of (sigma+1)/N
    __log_dir : str
        Directory the log file is written to
    __suite_config_path : str
        Path to the YAML file with verification suite defaults

    Methods
    -------
    seed() -> int
        Returns the master seed
    seed(seed: int) -> None
        Sets the master seed
    trials() -> int
        Returns the Monte Carlo trial count
    trials(trials: int) -> None
        Sets the Monte Carlo trial count
    workers() -> int
        Returns the worker count
    workers(workers: int) -> None
        Sets the worker count
    output_format() -> str
        Returns the output format
    output_format(output_format: str) -> None
        Sets the output format
    strict_draw() -> bool
        Returns the strict realization flag
    strict_draw(strict_draw: bool) -> None
        Sets the strict realization flag
    log_dir() -> str
        Returns the log directory
    suite_config_path() -> str
        Returns the suite configuration path
    """

    def __init__(
        self,
        seed: int = DEFAULT_SEED,
        trials: int = DEFAULT_TRIALS,
        workers: int = DEFAULT_WORKERS,
        output_format: str = DEFAULT_FORMAT,
        strict_draw: bool = False,
        log_dir: str = DEFAULT_LOG_DIR,
        suite_config_path: str = DEFAULT_SUITE_CONFIG,
    ) -> None:
        """
        Default Constructor for run settings

        Parameters
        ----------
        seed : int, default 0
            Master seed
        trials : int, default DEFAULT_TRIALS
            Monte Carlo trial count
        workers : int, default 1
            Worker processes for Monte Carlo runs
        output_format : str, default "json"
            Either "json" or "table"
        strict_draw : bool, default False
            Literal realization draw
        log_dir : str, default "logs"
            Directory for the log file
        suite_config_path : str, default DEFAULT_SUITE_CONFIG
            YAML file with suite defaults
        """
        self.__seed: int = seed
        self.__trials: int = trials
        self.__workers: int = workers
        self.__output_format: str = DEFAULT_FORMAT
        self.output_format = output_format
        self.__strict_draw: bool = strict_draw
        self.__log_dir: str = log_dir
        self.__suite_config_path: str = suite_config_path

    # ----- Randomness Settings ----- #
    @property
    def seed(self) -> int:
        """
        Gets the master seed

        Returns
        -------
        seed : int
            The master seed
        """
        return self.__seed

    @seed.setter
    def seed(self, seed: int) -> None:
        """
        Sets the master seed

        Parameters
        ----------
        seed : int
            The new master seed
        """
        self.__seed = seed

    @property
    def trials(self) -> int:
        """
        Gets the Monte Carlo trial count

        Returns
        -------
        trials : int
            Number of trials
        """
        return self.__trials

    @trials.setter
    def trials(self, trials: int) -> None:
        """
        Sets the Monte Carlo trial count

        Parameters
        ----------
        trials : int
            Number of trials, must be positive
        """
        if trials < 1:
            raise ValueError("trials must be positive")
        self.__trials = trials

    @property
    def workers(self) -> int:
        """
        Gets the worker count

        Returns
        -------
        workers : int
            Number of worker processes
        """
        return self.__workers

    @workers.setter
    def workers(self, workers: int) -> None:
        """
        Sets the worker count

        Parameters
        ----------
        workers : int
            Number of worker processes, must be positive
        """
        if workers < 1:
            raise ValueError("workers must be positive")
        self.__workers = workers

    # ----- Output Settings ----- #
    @property
    def output_format(self) -> str:
        """
        Gets the output format

        Returns
        -------
        output_format : str
            Either "json" or "table"
        """
        return self.__output_format

    @output_format.setter
    def output_format(self, output_format: str) -> None:
        """
        Sets the output format

        Parameters
        ----------
        output_format : str
            Either "json" or "table"
        """
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {output_format!r}")
        self.__output_format = output_format

    @property
    def strict_draw(self) -> bool:
        """
        Gets the flag selecting the literal sigma/N realization draw

        Returns
        -------
        strict_draw : bool
            True when the literal draw is used
        """
        return self.__strict_draw

    @strict_draw.setter
    def strict_draw(self, strict_draw: bool) -> None:
        """
        Sets the flag selecting the literal sigma/N realization draw

        Parameters
        ----------
        strict_draw : bool
            True to use the literal draw
        """
        self.__strict_draw = strict_draw

    @property
    def log_dir(self) -> str:
        """
        Gets the log directory

        Returns
        -------
        log_dir : str
            Directory the log file is written to
        """
        return self.__log_dir

    @property
    def suite_config_path(self) -> str:
        """
        Gets the suite configuration path

        Returns
        -------
        suite_config_path : str
            Path to the YAML suite defaults
        """
        return self.__suite_config_path
