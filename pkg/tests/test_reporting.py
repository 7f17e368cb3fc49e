"""
test_reporting.py

Objetivo del script:
Tests for machine lines and rich tables.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import json
from fractions import Fraction

import pytest
from rich.table import Table

from cubegrowth.exactalg import T, RatMatrix
from cubegrowth.generators import finite_as_labeled
from cubegrowth.growth import cbar_matrix, growth_matrix_finite, verify_inverse
from cubegrowth.models import CommandResult
from cubegrowth.reporting import (
    growth_report_rows,
    json_text,
    machine_lines,
    matrix_rows,
    result_table,
    series_text,
    status,
)


@pytest.mark.unit
def test_status():
    assert status(True) == "PASS"
    assert status(False) == "FAIL"


@pytest.mark.unit
def test_series_text():
    assert series_text([1, Fraction(1, 2), 0]) == "1,1/2,0"


@pytest.mark.unit
def test_matrix_rows_use_canonical_text():
    rows = matrix_rows("growth", ["a", "b"], RatMatrix.from_rows([[1, T], [T, 1]]))

    assert rows[1] == ("growth[a,b]", "(t)/(1)")
    assert len(rows) == 4


@pytest.mark.unit
def test_growth_report_rows(segment):
    ball = finite_as_labeled(segment)
    report = verify_inverse(cbar_matrix(ball), growth_matrix_finite(segment), orbit_ids=["a", "b"])

    rows = dict(growth_report_rows(report))

    assert rows["mode"] == "exact"
    assert rows["safe_degree[a]"] == "exact"
    assert rows["cbar[a,b]"] == "(-t)/(1 - t^2)"
    assert rows["identity"] == "PASS"
    assert rows["derived.summed_growth"] == "PASS"


@pytest.mark.unit
def test_machine_lines():
    result = CommandResult("demo", [("trace", "1")], passed=False)

    assert machine_lines(result) == "trace=1\nresult=FAIL\n"


@pytest.mark.unit
def test_json_text_carries_the_report(segment):
    ball = finite_as_labeled(segment)
    report = verify_inverse(cbar_matrix(ball), growth_matrix_finite(segment), orbit_ids=["a", "b"])
    result = CommandResult("demo", growth_report_rows(report), passed=report.passed)
    result.attach("report", report.to_dict())

    text = json_text(result)
    payload = json.loads(text)

    assert text.endswith("}\n")
    assert payload["rows"]["cbar[a,b]"] == "(-t)/(1 - t^2)"
    assert payload["details"]["report"]["orbit_ids"] == ["a", "b"]
    assert payload["details"]["report"]["per_row_safe_degree"] == [None, None]
    assert payload["passed"] is True

@pytest.mark.unit
def test_result_table():
    table = result_table(CommandResult("demo", [("a", "1"), ("b", "2")]))

    assert isinstance(table, Table)
    assert table.row_count == 3
    assert table.title == "demo"
