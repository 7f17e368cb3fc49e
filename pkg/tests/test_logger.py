"""
test_logger.py

Objetivo del script:
Tests for the colored logger setup.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging

import pytest

from cubegrowth.exceptions import ConfigurationError
from cubegrowth.logger import LEVEL_COLORS, RESET, ColorFormatter, get_logger


@pytest.mark.unit
def test_handler_is_attached_once():
    logger = get_logger("cubegrowth.test_once")
    get_logger("cubegrowth.test_once", level="DEBUG")

    assert len(logger.handlers) == 1
    assert logger.level == logging.DEBUG
    assert not logger.propagate


@pytest.mark.unit
def test_unknown_level_is_rejected():
    with pytest.raises(ConfigurationError, match="chatty"):
        get_logger("cubegrowth.test_unknown", level="chatty")


@pytest.mark.unit
def test_level_names_ignore_case():
    logger = get_logger("cubegrowth.test_case", level=" warning ")

    assert logger.level == logging.WARNING


@pytest.mark.unit
def test_color_formatter_wraps_message():
    record = logging.LogRecord("cubegrowth", logging.WARNING, __file__, 1, "careful", None, None)

    text = ColorFormatter(fmt="%(message)s").format(record)

    assert text == f"{LEVEL_COLORS[logging.WARNING]}careful{RESET}"
