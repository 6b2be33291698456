# MIT License

# Copyright (c) 2024, 2025 d-fens GmbH, http://d-fens.ch

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

# pylint: disable=E1101
# pylint: disable=E0401
# pylint: disable=E0611

"""Module log"""

import logging
import logging.config
from pathlib import Path

_LOGGER_NAME = "biz.dfch.twinforge"
_LOGGER_FILE = "logging.conf"

# Same layout as `logging.conf`; used when the package runs without its source tree.
_FALLBACK_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "default": {
            "format": "%(asctime)s %(levelname)s %(name)s %(module)s.%(funcName)s: %(message)s",
            "datefmt": "%Y-%m-%dT%H:%M:%S",
        },
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "level": "ERROR",
            "formatter": "default",
            "stream": "ext://sys.stderr",
        },
    },
    "root": {"level": "WARNING", "handlers": ["stderr"]},
    "loggers": {_LOGGER_NAME: {"level": "DEBUG", "propagate": True}},
}


def get_project_root(marker: str = "pyproject.toml") -> Path:
    """
    Get the project root directory.

    We walk up the directory tree from this file, until we find the file marker.
    """

    current = Path(__file__).resolve()
    for parent in [current, *current.parents]:
        if (parent / marker).exists():
            return parent
    raise FileNotFoundError(f"Could not find project root (looking for '{marker}')")


def get_project_src() -> Path:
    """Get the project source directory.

    Returns:
        result (Path): The `src` directory next to `pyproject.toml`.
    """

    root = get_project_root()
    result = Path(root / "src").resolve()

    return result


def set_level(level_name: str) -> None:
    """Sets the threshold of every root handler, e.g. from `-vv` on the command line."""

    assert isinstance(level_name, str) and level_name.strip()

    for handler in logging.getLogger().handlers:
        handler.setLevel(level_name.upper())


def _configure() -> logging.Logger:
    try:
        config_file = get_project_src() / _LOGGER_FILE
    except FileNotFoundError:
        config_file = None

    if config_file is not None and config_file.exists():
        logging.config.fileConfig(config_file, disable_existing_loggers=False)
    else:
        logging.config.dictConfig(_FALLBACK_CONFIG)

    return logging.getLogger(_LOGGER_NAME)


try:
    log = _configure()

except Exception as ex:
    print(f"{_LOGGER_NAME}: An error occurred while trying to load '{_LOGGER_FILE}': '{ex}'")

    raise
