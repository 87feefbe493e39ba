"""Functions and configurations for logging mechanism runs, suites and Monte Carlo workers"""

import logging
import os

from contextlib import contextmanager
from typing import Iterator, TextIO
from multiprocessing import Queue
from logging import Formatter, FileHandler, StreamHandler
from logging.handlers import QueueHandler, QueueListener
from datetime import datetime

from colorlog import ColoredFormatter

LOG_LEVEL = logging.DEBUG
LOG_FORMAT: str = "%(levelname)s | %(asctime)s @ %(processName)s:%(funcName)s > %(message)s"
COLOR_LOG_FORMAT: str = (
    "%(log_color)s%(levelname)s | %(asctime)s @ %(processName)s:%(funcName)s > %(message)s%(reset)s"
)


def init_logger(
    queue: "Queue[str]", log_dir: str = "logs", console_level: int = logging.INFO
) -> QueueListener:
    """
    Initializes a QueueListener object that writes every log record of a CLI
    invocation, including those of Monte Carlo worker processes

    Parameters
    ----------
    queue : Queue[str]
        Data structure to hold logging messages
    log_dir : str
        Directory the log file is created in
    console_level : int
        Lowest level shown on the console; the file receives everything

    Returns
    -------
    queue_listener : QueueListener
        Object to process log messages
    """
    os.makedirs(log_dir, exist_ok=True)
    file_formatter: Formatter = logging.Formatter(LOG_FORMAT)
    file: FileHandler = logging.FileHandler(
        os.path.join(log_dir, f"{datetime.now():%Y-%m-%d_%H-%M-%S}.log"), "a", encoding="utf-8"
    )
    file.setFormatter(file_formatter)

    console_formatter: Formatter = ColoredFormatter(COLOR_LOG_FORMAT)
    console: StreamHandler[TextIO] = logging.StreamHandler()
    console.setFormatter(console_formatter)
    console.setLevel(console_level)

    return QueueListener(queue, file, console, respect_handler_level=True)


def worker_configurer(queue: "Queue[str]") -> None:
    """
    Configures the logger to send logging messages to QueueListener process

    Parameters
    ----------
    queue : Queue[str]
        Data structure that holds logging messages
    """
    queue_handler: QueueHandler = QueueHandler(queue)
    root = logging.getLogger()
    root.addHandler(queue_handler)
    root.setLevel(LOG_LEVEL)


@contextmanager
def muted(level: int = logging.INFO) -> Iterator[None]:
    """
    Drops every record at `level` or below until the block exits, then
    restores the previous threshold

    Parameters
    ----------
    level : int
        Highest level to drop
    """
    previous: int = logging.root.manager.disable
    logging.disable(level)
    try:
        yield
    finally:
        logging.disable(previous)
