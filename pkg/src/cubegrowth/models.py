"""
models.py

Objetivo del script:
Report records produced by the growth verifications and the validated
options of a CLI command.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from cubegrowth.exceptions import PreconditionError

if TYPE_CHECKING:
    from cubegrowth.exactalg import RationalFunction, RatMatrix, SeriesMatrix


@dataclass
class CellFailure:
    row: str
    col: str
    expected: str
    actual: str
    degree: int | None = None

    def to_dict(self) -> dict[str, object]:
        return asdict(self)

    def describe(self) -> str:
        where = f"cell ({self.row}, {self.col})"
        if self.degree is not None:
            where += f" degree {self.degree}"
        return f"{where}: expected {self.expected}, got {self.actual}"


@dataclass
class DerivedCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        return asdict(self)


@dataclass
class GrowthReport:
    mode: str
    orbit_ids: list[str]
    cbar: RatMatrix
    growth: RatMatrix | SeriesMatrix
    per_row_safe_degree: list[int | None]
    failures: list[CellFailure] = field(default_factory=list)
    derived: list[DerivedCheck] = field(default_factory=list)
    degree: int | None = None

    @property
    def identity_holds(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> bool:
        return self.identity_holds and all(check.passed for check in self.derived)

    def to_dict(self) -> dict[str, object]:
        return {
            "mode": self.mode,
            "degree": self.degree,
            "orbit_ids": list(self.orbit_ids),
            "per_row_safe_degree": list(self.per_row_safe_degree),
            "identity_holds": self.identity_holds,
            "failures": [row.to_dict() for row in self.failures],
            "derived": [row.to_dict() for row in self.derived],
        }


@dataclass
class SumCheck:
    vertex: str
    total: RationalFunction
    expected: RationalFunction

    @property
    def passed(self) -> bool:
        return self.total == self.expected

    def to_dict(self) -> dict[str, object]:
        return {
            "vertex": self.vertex,
            "total": self.total.canonical(),
            "expected": self.expected.canonical(),
            "passed": self.passed,
        }


@dataclass
class EulerTraceResult:
    trace: Fraction
    euler_char: int | None
    stars_embed: bool

    @property
    def passed(self) -> bool:
        return self.stars_embed and self.euler_char is not None and self.trace == self.euler_char

    def to_dict(self) -> dict[str, object]:
        return {
            "trace": str(self.trace),
            "euler_char": self.euler_char,
            "stars_embed": self.stars_embed,
            "passed": self.passed,
        }


@dataclass
class Cat0Witness:
    """Concrete reason a complex is not CAT(0)."""

    kind: str
    vertices: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.kind}: {' '.join(self.vertices)}"
        return f"{text} ({self.detail})" if self.detail else text

    def to_dict(self) -> dict[str, object]:
        return asdict(self)


@dataclass
class BallStats:
    radius: int
    dim: int
    vertex_count: int
    orbit_count: int
    star_complete_radius: int
    sphere_sizes: list[int]
    cube_counts: list[int]

    def to_dict(self) -> dict[str, object]:
        return asdict(self)


@dataclass
class ReciprocityResult:
    n: int
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "checked": self.checked, "failures": list(self.failures)}


class Verb(str, Enum):
    CHECK = "check"
    FPOLY = "fpoly"
    COEFFS = "coeffs"
    SUM_COEFFS = "sum-coeffs"
    GROWTH = "growth"
    VERIFY = "verify"
    DAVIS = "davis"
    TORUS = "torus"
    RAAG_BALL = "raag-ball"
    RACG_BALL = "racg-ball"
    RECIPROCITY = "reciprocity"
    EULER_TRACE = "euler-trace"


class OutputFormat(str, Enum):
    TEXT = "text"
    MACHINE = "machine"
    JSON = "json"


_NEEDS_INPUT = {
    Verb.CHECK,
    Verb.FPOLY,
    Verb.COEFFS,
    Verb.SUM_COEFFS,
    Verb.GROWTH,
    Verb.VERIFY,
    Verb.DAVIS,
    Verb.RAAG_BALL,
    Verb.RACG_BALL,
}
_INPUT_OR_TORUS = {Verb.RECIPROCITY, Verb.EULER_TRACE}
_NEEDS_DIM = {Verb.TORUS}
_NEEDS_SUBDIV = {Verb.TORUS}


class CommandOptions(BaseModel):
    verb: Verb
    inputs: list[str] = Field(default_factory=list)
    radius: int = Field(ge=0, default=6)
    degree: int = Field(ge=0, default=8)
    base: str | None = None
    dim: int | None = Field(ge=0, default=None)
    subdiv: int | None = Field(ge=2, default=None)
    output_format: OutputFormat = OutputFormat.TEXT
    emit: str | None = None

    def validate_for_verb(self) -> CommandOptions:
        """Check per-verb requirements before any computation runs."""
        if self.verb in _NEEDS_INPUT and not self.inputs:
            raise PreconditionError(f"'{self.verb.value}' needs an input file", field="inputs")
        if self.verb in _NEEDS_DIM and self.dim is None:
            raise PreconditionError(f"'{self.verb.value}' needs --dim", field="dim")
        if self.verb in _NEEDS_SUBDIV and self.subdiv is None:
            raise PreconditionError(f"'{self.verb.value}' needs --subdiv", field="subdiv")
        if self.verb in (Verb.RAAG_BALL, Verb.RACG_BALL) and self.radius < 1:
            raise PreconditionError("ball radius must be >= 1", field="radius", value=self.radius)
        if self.verb in _INPUT_OR_TORUS and not self.inputs:
            if self.dim is None or self.subdiv is None:
                raise PreconditionError(
                    f"'{self.verb.value}' needs an input file or --dim with --subdiv",
                    field="inputs",
                )
        return self


@dataclass
class CommandResult:
    """Report of one CLI verb: ordered key/value rows plus the overall verdict.

    ``details`` holds the structured records behind the rows, keyed by name,
    for the JSON format.
    """

    title: str
    rows: list[tuple[str, str]] = field(default_factory=list)
    passed: bool = True
    details: dict[str, object] = field(default_factory=dict)

    def add(self, key: str, value: object) -> None:
        self.rows.append((key, str(value)))

    def attach(self, key: str, record: dict[str, object]) -> None:
        self.details[key] = record

    def to_dict(self) -> dict[str, object]:
        return {
            "title": self.title,
            "rows": dict(self.rows),
            "passed": self.passed,
            "details": dict(self.details),
        }
