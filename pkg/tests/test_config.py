"""
test_config.py

Objetivo del script:
Tests for configuration loading and validation.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from pathlib import Path

import pytest

from cubegrowth.config import Settings, load_settings
from cubegrowth.exceptions import ConfigurationError


@pytest.mark.unit
def test_settings_defaults():
    """Test Settings dataclass defaults."""
    settings = Settings()

    assert settings.log_level == "INFO"
    assert settings.radius == 6
    assert settings.degree == 8
    assert settings.output_format == "text"
    assert settings.median_limit == 400


@pytest.mark.unit
def test_settings_frozen():
    """Test that Settings is immutable (frozen)."""
    settings = Settings()
    with pytest.raises(Exception):  # FrozenInstanceError
        settings.radius = 3  # type: ignore


@pytest.mark.unit
def test_load_settings_without_overrides(clean_env: pytest.MonkeyPatch):
    """Test loading with only the log level set by the fixture."""
    settings = load_settings()

    assert settings.log_level == "WARNING"
    assert settings.radius == 6
    assert settings.output_format == "text"


@pytest.mark.unit
def test_load_settings_reads_environment(clean_env: pytest.MonkeyPatch):
    """Test that every variable is picked up and normalised."""
    clean_env.setenv("CUBEGROWTH_LOG_LEVEL", "debug")
    clean_env.setenv("CUBEGROWTH_RADIUS", "10")
    clean_env.setenv("CUBEGROWTH_DEGREE", "12")
    clean_env.setenv("CUBEGROWTH_FORMAT", "MACHINE")
    clean_env.setenv("CUBEGROWTH_MEDIAN_LIMIT", "50")

    settings = load_settings()

    assert settings.log_level == "DEBUG"
    assert settings.radius == 10
    assert settings.degree == 12
    assert settings.output_format == "machine"
    assert settings.median_limit == 50


@pytest.mark.unit
def test_load_settings_from_env_file(clean_env: pytest.MonkeyPatch, tmp_path: Path):
    """Test reading an explicit .env file."""
    # Registered so teardown also removes the value load_dotenv writes.
    clean_env.setenv("CUBEGROWTH_RADIUS", "0")
    clean_env.delenv("CUBEGROWTH_RADIUS")
    env_file = tmp_path / ".env"
    env_file.write_text("CUBEGROWTH_RADIUS=4\n", encoding="utf-8")

    settings = load_settings(env_file)

    assert settings.radius == 4


@pytest.mark.unit
@pytest.mark.parametrize(
    ("name", "value"),
    [
        ("CUBEGROWTH_LOG_LEVEL", "LOUD"),
        ("CUBEGROWTH_FORMAT", "json"),
        ("CUBEGROWTH_RADIUS", "six"),
        ("CUBEGROWTH_DEGREE", "-1"),
        ("CUBEGROWTH_MEDIAN_LIMIT", "0"),
    ],
)
def test_load_settings_rejects_bad_values(clean_env: pytest.MonkeyPatch, name, value):
    """Test that malformed values raise ConfigurationError naming the variable."""
    clean_env.setenv(name, value)

    with pytest.raises(ConfigurationError, match=name):
        load_settings()
