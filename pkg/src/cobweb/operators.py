"""F-derivative and its conjugate raising operator on truncated polynomials.

Operators act on the monomial basis ``x^0..x^N``.  Column ``j`` of the
matrix is the image of ``x^j``; everything above degree ``N`` is dropped.
All entries are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, TruncationTooSmall
from .fnomial import format_rational
from .sequences import FSequence, value

Matrix = tuple[tuple[Fraction, ...], ...]


def _zeros(size: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * size for _ in range(size)]


@dataclass(frozen=True)
class PolyOperator:
    N: int
    matrix: Matrix

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> PolyOperator:
        m = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if any(len(row) != len(m) for row in m):
            raise DimensionMismatch("operator matrix must be square")
        return cls(len(m) - 1, m)

    @classmethod
    def identity(cls, N: int) -> PolyOperator:
        return cls.from_rows([[int(i == j) for j in range(N + 1)] for i in range(N + 1)])

    @classmethod
    def zero(cls, N: int) -> PolyOperator:
        return cls.from_rows(_zeros(N + 1))

    def _check(self, other: PolyOperator):
        if self.N != other.N:
            raise DimensionMismatch(f"truncation degrees differ: {self.N} vs {other.N}")

    def __add__(self, other: PolyOperator) -> PolyOperator:
        self._check(other)
        return PolyOperator(self.N, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other: PolyOperator) -> PolyOperator:
        self._check(other)
        return PolyOperator(self.N, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def scale(self, c) -> PolyOperator:
        c = Fraction(c)
        return PolyOperator(self.N, tuple(tuple(c * a for a in r) for r in self.matrix))

    def __matmul__(self, other: PolyOperator) -> PolyOperator:
        self._check(other)
        size = self.N + 1
        cols = list(zip(*other.matrix))
        out = []
        for row in self.matrix:
            nz = [(t, a) for t, a in enumerate(row) if a]
            out.append(tuple(sum((a * cols[j][t] for t, a in nz), Fraction(0)) for j in range(size)))
        return PolyOperator(self.N, tuple(out))

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.matrix)

    def apply(self, coeffs: Sequence) -> list[Fraction]:
        """Image of the polynomial with the given low-to-high coefficients."""
        if len(coeffs) > self.N + 1:
            raise DimensionMismatch(f"polynomial degree exceeds truncation {self.N}")
        v = [Fraction(c) for c in coeffs] + [Fraction(0)] * (self.N + 1 - len(coeffs))
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.matrix]

    def is_zero(self, columns: Iterable[int] | None = None) -> bool:
        cols = range(self.N + 1) if columns is None else columns
        return all(self.matrix[i][j] == 0 for j in cols for i in range(self.N + 1))

    def to_dict(self) -> dict:
        return {"N": self.N, "rows": [[format_rational(a) for a in row] for row in self.matrix]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class PolySpec:
    """Univariate polynomial, coefficients low-to-high, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text: str) -> PolySpec:
        """``"1,0,-1/2"`` -> 1 - x^2/2."""
        parts = [t.strip() for t in text.split(",")]
        if not parts or any(not t for t in parts):
            raise ValueError(f"bad polynomial coefficient list {text!r}")
        return cls(tuple(Fraction(t) for t in parts))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def derivative(self) -> PolySpec:
        return PolySpec(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self):
        return ",".join(format_rational(c) for c in self.coeffs) or "0"


def f_derivative_op(F: FSequence, N: int) -> PolyOperator:
    """``x^n -> n_F x^(n-1)``, with ``1 -> 0``."""
    m = _zeros(N + 1)
    for n in range(1, N + 1):
        m[n - 1][n] = Fraction(value(F, n))
    return PolyOperator.from_rows(m)


def x_hat_op(F: FSequence, N: int) -> PolyOperator:
    """``x^n -> (n+1)/(n+1)_F x^(n+1)``; the image of ``x^N`` is truncated away.

    This scaling is what makes ``[d_F, x_hat_F]`` the identity.
    """
    value(F, N + 1)
    m = _zeros(N + 1)
    for n in range(N):
        m[n + 1][n] = Fraction(n + 1, value(F, n + 1))
    return PolyOperator.from_rows(m)


def commutator(A: PolyOperator, B: PolyOperator) -> PolyOperator:
    A._check(B)
    return A @ B - B @ A


def poly_of_op(f: PolySpec, A: PolyOperator) -> PolyOperator:
    """``sum f_i A^i`` by Horner's scheme."""
    eye = PolyOperator.identity(A.N)
    out = PolyOperator.zero(A.N)
    for c in reversed(f.coeffs):
        out = out @ A + eye.scale(c)
    return out


@dataclass(frozen=True)
class ResidualReport:
    f: PolySpec
    sequence: str
    N: int
    safe_columns: int
    max_residual: Fraction

    @property
    def holds(self) -> bool:
        return self.max_residual == 0

    def to_dict(self) -> dict:
        return {
            "f": str(self.f),
            "F": self.sequence,
            "N": self.N,
            "safe_columns": self.safe_columns,
            "max_residual_numerator": self.max_residual.numerator,
            "max_residual_denominator": self.max_residual.denominator,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def check_graves_identity(f: PolySpec, F: FSequence, N: int) -> ResidualReport:
    """Residual of ``[f(d_F), x_hat_F] = f'(d_F)`` on the truncation-safe columns.

    Only columns ``0..N-deg(f)-1`` are inspected; ``safe_columns`` in the
    report is their count.
    """
    d = max(f.degree, 0)
    if N < d + 2:
        raise TruncationTooSmall(f"need N >= deg f + 2 = {d + 2}, got {N}")
    D = f_derivative_op(F, N)
    X = x_hat_op(F, N)
    R = commutator(poly_of_op(f, D), X) - poly_of_op(f.derivative(), D)
    safe = N - d
    worst = max((abs(R.matrix[i][j]) for j in range(safe) for i in range(N + 1)), default=Fraction(0))
    return ResidualReport(f, F.name, N, safe, worst)
