"""
reporting.py

Objetivo del script:
Rendering of verification results: deterministic ``key=value`` lines for the
machine format and rich tables for the text format. Rational functions are
always shown through their canonical rendering.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from fractions import Fraction

from rich.table import Table

from cubegrowth.exactalg import RatMatrix, SeriesMatrix
from cubegrowth.models import CommandResult, GrowthReport


def status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def series_text(coefficients: Sequence[Fraction | int]) -> str:
    return ",".join(str(c) for c in coefficients)


def matrix_rows(
    prefix: str, names: Sequence[str], matrix: RatMatrix | SeriesMatrix
) -> list[tuple[str, str]]:
    rows = []
    for i, row_name in enumerate(names):
        for j, col_name in enumerate(names):
            cell = matrix[i, j]
            text = series_text(cell) if isinstance(matrix, SeriesMatrix) else cell.canonical()
            rows.append((f"{prefix}[{row_name},{col_name}]", text))
    return rows


def growth_report_rows(report: GrowthReport) -> list[tuple[str, str]]:
    rows = [("mode", report.mode), ("orbits", " ".join(report.orbit_ids))]
    if report.degree is not None:
        rows.append(("degree", str(report.degree)))
    for name, safe in zip(report.orbit_ids, report.per_row_safe_degree, strict=True):
        rows.append((f"safe_degree[{name}]", "exact" if safe is None else str(safe)))
    rows += matrix_rows("cbar", report.orbit_ids, report.cbar)
    rows += matrix_rows("growth", report.orbit_ids, report.growth)
    rows.append(("identity", status(report.identity_holds)))
    rows += [("failure", failure.describe()) for failure in report.failures]
    rows += [(f"derived.{check.name}", status(check.passed)) for check in report.derived]
    return rows


def machine_lines(result: CommandResult) -> str:
    lines = [f"{key}={value}" for key, value in result.rows]
    lines.append(f"result={status(result.passed)}")
    return "\n".join(lines) + "\n"


def json_text(result: CommandResult) -> str:
    return json.dumps(result.to_dict(), ensure_ascii=False, indent=2) + "\n"


def result_table(result: CommandResult) -> Table:
    table = Table(title=result.title)
    table.add_column("Key")
    table.add_column("Value", overflow="fold")
    for key, value in result.rows:
        table.add_row(key, value)
    table.add_row("result", status(result.passed))
    return table
