"""
logger.py

Objetivo del script:
Logging configuration with colored output for the cubegrowth CLI.

Library modules log through ``logging.getLogger(__name__)``; the CLI calls
``get_logger`` once so those records reach stderr with a level color.
Reports are printed on stdout, so logs never mix with machine output.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging

from cubegrowth.exceptions import ConfigurationError

RESET = "\033[0m"
LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[35m",
}


class ColorFormatter(logging.Formatter):
    """Formatter that wraps each record in the ANSI color of its level."""

    def format(self, record: logging.LogRecord) -> str:
        color = LEVEL_COLORS.get(record.levelno, "")
        plain = super().format(record)
        return f"{color}{plain}{RESET}"


def get_logger(name: str = "cubegrowth", level: str | int = logging.INFO) -> logging.Logger:
    """Creates or retrieves the package logger with colored stderr output.

    The handler is attached once; later calls only adjust the level, so the
    CLI can honour ``--log-level`` after settings were loaded.

    Args:
        name: Logger name. Child loggers such as ``cubegrowth.growth``
            propagate into it.
        level: Level name (``"DEBUG"``) or number.

    Returns:
        Configured Logger instance.

    Raises:
        ConfigurationError: If ``level`` is not a known level name.
    """
    logger = logging.getLogger(name)
    logger.setLevel(_coerce_level(level))
    if logger.handlers:
        return logger

    handler = logging.StreamHandler()
    handler.setFormatter(
        ColorFormatter(
            fmt="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%H:%M:%S",
        )
    )
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def _coerce_level(level: str | int) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.strip().upper())
    if not isinstance(value, int):
        raise ConfigurationError(f"unknown log level {level!r}, e.g. INFO or DEBUG")
    return value
