"""
exactalg.py

Objetivo del script:
Exact arithmetic over the rationals: polynomials in t, rational functions,
dense matrices over the rational-function field and truncated power series.

Coefficients are ``fractions.Fraction``; there is no floating point anywhere
in this module. Every RationalFunction is kept in canonical form (coprime
integer numerator and denominator, jointly primitive, denominator's
lowest-order coefficient positive), so equality is a comparison of
representations.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from cubegrowth.exceptions import (
    DimensionMismatchError,
    NotAPowerSeriesError,
    PreconditionError,
    SingularMatrixError,
    ZeroDivisionInFieldError,
)

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in t with rational coefficients, ascending by degree.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is the empty tuple and equal polynomials compare equal.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def constant(cls, value: Number) -> Polynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> Polynomial:
        if degree < 0:
            raise PreconditionError("monomial degree must be >= 0", field="degree", value=degree)
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def lowest_order(self) -> int:
        """Index of the first nonzero coefficient (-1 for zero)."""
        for index, value in enumerate(self.coeffs):
            if value:
                return index
        return -1

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self.coefficient(0))
        return hash(self.coeffs)

    def __add__(self, other: Polynomial | Number) -> Polynomial:
        other = _as_polynomial(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial | Number) -> Polynomial:
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: Number) -> Polynomial:
        return _as_polynomial(other) - self

    def __mul__(self, other: Polynomial | Number) -> Polynomial:
        other = _as_polynomial(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise PreconditionError(
                "polynomial exponent must be >= 0", field="exponent", value=exponent
            )
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division over Q: ``self = q * divisor + r``, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionInFieldError("polynomial division by zero")
        remainder = list(self.coeffs)
        if len(remainder) < len(divisor.coeffs):
            return Polynomial(), self
        quotient = [Fraction(0)] * (len(remainder) - len(divisor.coeffs) + 1)
        lead = divisor.leading
        top = len(divisor.coeffs) - 1
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + top] / lead
            if factor:
                quotient[shift] = factor
                for index, value in enumerate(divisor.coeffs):
                    remainder[shift + index] -= factor * value
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder[:top]))

    def __floordiv__(self, divisor: Polynomial) -> Polynomial:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: Polynomial) -> Polynomial:
        return self.divmod(divisor)[1]

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise PreconditionError(
                "polynomial division is not exact", field="divisor", value=divisor
            )
        return quotient

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial(tuple(c / lead for c in self.coeffs))

    @staticmethod
    def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
        """Monic greatest common divisor by the Euclidean algorithm over Q."""
        if a.is_zero:
            return b.monic()
        if b.is_zero:
            return a.monic()
        if a.degree == 0 or b.degree == 0:
            return Polynomial.constant(1)
        if a.degree < b.degree:
            a, b = b, a
        a, b = a.monic(), b.monic()
        while not b.is_zero:
            a, b = b, (a % b).monic()
        return a

    def evaluate(self, x: Number) -> Fraction:
        result = Fraction(0)
        for value in reversed(self.coeffs):
            result = result * x + value
        return result

    __call__ = evaluate

    def compose(self, inner: Polynomial) -> Polynomial:
        """Polynomial substitution ``self(inner(t))``."""
        result = Polynomial()
        for value in reversed(self.coeffs):
            result = result * inner + value
        return result

    def reverse(self) -> Polynomial:
        """``t^deg * self(1/t)``: the coefficient sequence read backwards."""
        return Polynomial(tuple(reversed(self.coeffs)))

    def shift(self, places: int) -> Polynomial:
        """Multiply by ``t^places``."""
        if self.is_zero or places == 0:
            return self
        return Polynomial((Fraction(0),) * places + self.coeffs)

    def denominator_lcm(self) -> int:
        return lcm(1, *(c.denominator for c in self.coeffs))

    def __str__(self) -> str:
        return _render_terms(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _as_polynomial(value: Polynomial | Number) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


class RationalFunction:
    """Exact ratio of polynomials in t, always in canonical form.

    Canonical form: numerator and denominator are coprime, have integer
    coefficients with no common integer factor, and the denominator's
    lowest-order nonzero coefficient is positive. Zero is ``0/1``.
    """

    __slots__ = ("numerator", "denominator")

    numerator: Polynomial
    denominator: Polynomial

    def __init__(
        self,
        numerator: Polynomial | Number = 0,
        denominator: Polynomial | Number = 1,
    ) -> None:
        num = _as_polynomial(numerator)
        den = _as_polynomial(denominator)
        if den.is_zero:
            raise ZeroDivisionInFieldError("rational function with zero denominator")
        num, den = _canonical(num, den)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def variable(cls) -> RationalFunction:
        return cls(Polynomial.monomial(1))

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> RationalFunction:
        return cls(Polynomial.monomial(degree, coefficient))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        """Matches the hash of the equal number or polynomial when there is one."""
        if self.is_polynomial:
            return hash(self.numerator * (1 / self.denominator.coeffs[0]))
        return hash((self.numerator, self.denominator))

    def __add__(self, other: RationalFunction | Polynomial | Number) -> RationalFunction:
        other = as_rational(other)
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return _from_canonical(-self.numerator, self.denominator)

    def __sub__(self, other: RationalFunction | Polynomial | Number) -> RationalFunction:
        return self + (-as_rational(other))

    def __rsub__(self, other: Number) -> RationalFunction:
        return as_rational(other) - self

    def __mul__(self, other: RationalFunction | Polynomial | Number) -> RationalFunction:
        other = as_rational(other)
        if self.is_zero or other.is_zero:
            return RationalFunction()
        return RationalFunction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Polynomial | Number) -> RationalFunction:
        other = as_rational(other)
        if other.is_zero:
            raise ZeroDivisionInFieldError("division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def __rtruediv__(self, other: Number) -> RationalFunction:
        return as_rational(other) / self

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            return RationalFunction(1) / (self ** (-exponent))
        # Powers of coprime polynomials stay coprime.
        return RationalFunction(self.numerator**exponent, self.denominator**exponent)

    def evaluate(self, x: Number) -> Fraction:
        den = self.denominator.evaluate(x)
        if den == 0:
            raise ZeroDivisionInFieldError(f"pole at t = {x}")
        return self.numerator.evaluate(x) / den

    def canonical(self) -> str:
        """Canonical text rendering ``(c0 + c1*t + ...)/(d0 + d1*t + ...)``."""
        return f"({self.numerator})/({self.denominator})"

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"RationalFunction({self.canonical()})"


def as_rational(value: RationalFunction | Polynomial | Number) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


def _from_canonical(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Wrap a pair already known to be canonical, skipping the gcd."""
    result = object.__new__(RationalFunction)
    object.__setattr__(result, "numerator", num)
    object.__setattr__(result, "denominator", den)
    return result


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if num.is_zero:
        return Polynomial(), Polynomial.constant(1)
    common = Polynomial.gcd(num, den)
    if common.degree > 0:
        num = num.exact_div(common)
        den = den.exact_div(common)
    scale = lcm(num.denominator_lcm(), den.denominator_lcm())
    integers = [int(c * scale) for c in num.coeffs + den.coeffs]
    content = gcd(*integers)
    if den.coeffs[den.lowest_order] < 0:
        content = -content
    num = Polynomial(tuple(Fraction(int(c * scale), content) for c in num.coeffs))
    den = Polynomial(tuple(Fraction(int(c * scale), content) for c in den.coeffs))
    return num, den


def _render_terms(coeffs: Sequence[Fraction]) -> str:
    if not coeffs:
        return "0"
    pieces: list[str] = []
    for degree, value in enumerate(coeffs):
        if not value:
            continue
        magnitude = abs(value)
        if degree == 0:
            body = str(magnitude)
        else:
            power = "t" if degree == 1 else f"t^{degree}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f"- {body}" if value < 0 else f"+ {body}")
    return " ".join(pieces)


ZERO = RationalFunction(0)
ONE = RationalFunction(1)
T = RationalFunction.variable()


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_sub(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a - b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_neg(a: RationalFunction) -> RationalFunction:
    return -a


def rf_div(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a / b


def rf_pow(a: RationalFunction, exponent: int) -> RationalFunction:
    if exponent < 0:
        raise PreconditionError("rf_pow exponent must be >= 0", field="exponent", value=exponent)
    return a**exponent


def rf_sum(terms: Iterable[RationalFunction]) -> RationalFunction:
    """Sum many rational functions, adding numerators over shared denominators first."""
    grouped: dict[Polynomial, Polynomial] = {}
    for term in terms:
        if term.is_zero:
            continue
        grouped[term.denominator] = grouped.get(term.denominator, Polynomial()) + term.numerator
    total = ZERO
    for den, num in grouped.items():
        total = total + RationalFunction(num, den)
    return total


def poly_subst(p: Polynomial, r: RationalFunction) -> RationalFunction:
    """Exact value of ``p(r)``.

    With ``r = a/b`` and ``n = deg p`` this is ``sum c_i a^i b^(n-i) / b^n``,
    normalized once at the end.
    """
    if p.degree <= 0:
        return RationalFunction(p)
    a, b = r.numerator, r.denominator
    n = p.degree
    a_powers = [Polynomial.constant(1)]
    b_powers = [Polynomial.constant(1)]
    for _ in range(n):
        a_powers.append(a_powers[-1] * a)
        b_powers.append(b_powers[-1] * b)
    numerator = Polynomial()
    for i, value in enumerate(p.coeffs):
        if value:
            numerator = numerator + a_powers[i] * b_powers[n - i] * value
    return RationalFunction(numerator, b_powers[n])


def rf_series(r: RationalFunction, degree: int) -> list[Fraction]:
    """First ``degree + 1`` Taylor coefficients of r at t = 0.

    Raises:
        NotAPowerSeriesError: If the denominator vanishes at t = 0.
    """
    if degree < 0:
        raise PreconditionError("series degree must be >= 0", field="degree", value=degree)
    num, den = r.numerator, r.denominator
    lead = den.coefficient(0)
    if lead == 0:
        raise NotAPowerSeriesError(f"{r.canonical()} has a pole at t = 0")
    series: list[Fraction] = []
    for k in range(degree + 1):
        value = num.coefficient(k)
        for j in range(1, min(k, den.degree) + 1):
            value -= den.coeffs[j] * series[k - j]
        series.append(value / lead)
    return series


def series_mul(a: Sequence[Number], b: Sequence[Number], degree: int) -> list[Fraction]:
    """Truncated convolution of two coefficient sequences up to ``degree``."""
    result = [Fraction(0)] * (degree + 1)
    for i in range(min(len(a), degree + 1)):
        if not a[i]:
            continue
        for j in range(min(len(b), degree + 1 - i)):
            result[i + j] += a[i] * b[j]
    return result


def rf_invert_t(r: RationalFunction) -> RationalFunction:
    """The rational function ``r(1/t)``, by reversing coefficient sequences."""
    if r.is_zero:
        return ZERO
    num, den = r.numerator, r.denominator
    num_rev, den_rev = num.reverse(), den.reverse()
    balance = den.degree - num.degree
    if balance >= 0:
        num_rev = num_rev.shift(balance)
    else:
        den_rev = den_rev.shift(-balance)
    return RationalFunction(num_rev, den_rev)


@dataclass(frozen=True)
class RatMatrix:
    """Dense matrix over the rational-function field, row-major."""

    rows: int
    cols: int
    entries: tuple[RationalFunction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(as_rational(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalFunction | Number]]) -> RatMatrix:
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), width, tuple(as_rational(e) for row in rows for e in row))

    @classmethod
    def identity(cls, size: int) -> RatMatrix:
        return cls(
            size,
            size,
            tuple(ONE if i == j else ZERO for i in range(size) for j in range(size)),
        )

    def __getitem__(self, index: tuple[int, int]) -> RationalFunction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[RationalFunction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[RationalFunction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> RatMatrix:
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def row_sums(self) -> tuple[RationalFunction, ...]:
        return tuple(rf_sum(self.row(i)) for i in range(self.rows))

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        return mat_mul(self, other)


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    cells: list[RationalFunction] = []
    for i in range(a.rows):
        left = a.row(i)
        for j in range(b.cols):
            cells.append(rf_sum(left[k] * b[k, j] for k in range(a.cols) if not left[k].is_zero))
    return RatMatrix(a.rows, b.cols, tuple(cells))


def mat_is_identity(a: RatMatrix) -> bool:
    if a.rows != a.cols:
        return False
    return all(
        a[i, j] == (ONE if i == j else ZERO) for i in range(a.rows) for j in range(a.cols)
    )


def mat_solve(
    a: RatMatrix, b: Sequence[RationalFunction | Number]
) -> tuple[RationalFunction, ...]:
    """Solve ``a x = b`` exactly.

    Rows are first scaled to polynomial entries; fraction-free (Bareiss)
    elimination then keeps every intermediate a polynomial, with exact
    divisions by the previous pivot. Back substitution runs in the field.

    Raises:
        DimensionMismatchError: If a is not square or b has the wrong length.
        SingularMatrixError: If a is singular over the rational-function field.
    """
    if a.rows != a.cols:
        raise DimensionMismatchError(f"mat_solve needs a square matrix, got {a.rows}x{a.cols}")
    if len(b) != a.rows:
        raise DimensionMismatchError(f"right-hand side has {len(b)} entries, expected {a.rows}")
    size = a.rows
    rhs = [as_rational(v) for v in b]

    work: list[list[Polynomial]] = []
    for i in range(size):
        cells = list(a.row(i)) + [rhs[i]]
        scale = Polynomial.constant(1)
        for cell in cells:
            if cell.denominator.degree > 0:
                scale = _poly_lcm(scale, cell.denominator)
        work.append([cell.numerator * scale.exact_div(cell.denominator) for cell in cells])

    previous = Polynomial.constant(1)
    for k in range(size):
        pivot_row = next((i for i in range(k, size) if not work[i][k].is_zero), None)
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {k}")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
        pivot = work[k][k]
        for i in range(k + 1, size):
            factor = work[i][k]
            for j in range(k + 1, size + 1):
                work[i][j] = (work[i][j] * pivot - factor * work[k][j]).exact_div(previous)
            work[i][k] = Polynomial()
        previous = pivot
        logger.debug("Bareiss step %d/%d, pivot degree %d", k + 1, size, pivot.degree)

    solution: list[RationalFunction] = [ZERO] * size
    for i in range(size - 1, -1, -1):
        acc = RationalFunction(work[i][size])
        for j in range(i + 1, size):
            if not work[i][j].is_zero:
                acc = acc - solution[j] * work[i][j]
        solution[i] = acc / RationalFunction(work[i][i])
    return tuple(solution)


def _poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    return (a * b).exact_div(Polynomial.gcd(a, b))


@dataclass(frozen=True)
class SeriesMatrix:
    """Matrix of truncated power series with a valid degree per row.

    ``entries`` is row-major; each cell holds the coefficients of
    ``t^0..t^degree``. Coefficients of row i above ``per_row_degree[i]`` are
    present but carry no guarantee.
    """

    rows: int
    cols: int
    degree: int
    entries: tuple[tuple[Fraction, ...], ...]
    per_row_degree: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} cells for a {self.rows}x{self.cols} series matrix"
            )
        if any(len(cell) != self.degree + 1 for cell in self.entries):
            raise DimensionMismatchError(f"every cell needs {self.degree + 1} coefficients")
        if len(self.per_row_degree) != self.rows:
            raise DimensionMismatchError("per_row_degree must have one entry per row")
        if any(d < 0 or d > self.degree for d in self.per_row_degree):
            raise PreconditionError(
                "row degrees must lie in [0, degree]",
                field="per_row_degree",
                value=self.per_row_degree,
            )

    def __getitem__(self, index: tuple[int, int]) -> tuple[Fraction, ...]:
        i, j = index
        return self.entries[i * self.cols + j]
