"""
config.py

Objetivo del script:
Runtime settings for cubegrowth, loaded from the environment or a .env file.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from cubegrowth.exceptions import ConfigurationError

OUTPUT_FORMATS = ("text", "machine", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    radius: int = 6
    degree: int = 8
    output_format: str = "text"
    median_limit: int = 400


def load_settings(env_file: Path | None = None) -> Settings:
    """Load settings from an optional .env file and the environment.

    Args:
        env_file: Explicit .env path. If omitted, python-dotenv searches the
            current directory and its parents.

    Raises:
        ConfigurationError: If a variable holds a malformed value.
    """
    if env_file is not None:
        load_dotenv(env_file)
    else:
        load_dotenv()

    log_level = os.getenv("CUBEGROWTH_LOG_LEVEL", "INFO").strip().upper() or "INFO"
    if log_level not in LOG_LEVELS:
        raise ConfigurationError(
            f"CUBEGROWTH_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, e.g. INFO"
        )

    output_format = os.getenv("CUBEGROWTH_FORMAT", "text").strip().lower() or "text"
    if output_format not in OUTPUT_FORMATS:
        raise ConfigurationError(f"CUBEGROWTH_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")

    radius = _read_int("CUBEGROWTH_RADIUS", 6, minimum=0)
    degree = _read_int("CUBEGROWTH_DEGREE", 8, minimum=0)
    median_limit = _read_int("CUBEGROWTH_MEDIAN_LIMIT", 400, minimum=1)

    return Settings(
        log_level=log_level,
        radius=radius,
        degree=degree,
        output_format=output_format,
        median_limit=median_limit,
    )


def _read_int(name: str, default: int, *, minimum: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an int, e.g. {default}") from exc
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}")
    return value
