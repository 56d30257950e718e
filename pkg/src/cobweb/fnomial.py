"""F-nomial coefficients and bounded admissibility checks."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidRange
from .sequences import FSequence, value

DEFAULT_ADMISSIBILITY_BOUND = 20


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FNomialReport:
    n: int
    k: int
    value: Fraction

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    @property
    def is_nonnegative(self) -> bool:
        return self.value >= 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "numerator": self.value.numerator,
            "denominator": self.value.denominator,
            "is_integer": self.is_integer,
            "is_nonnegative": self.is_nonnegative,
        }


@dataclass(frozen=True)
class AdmissibilityReport:
    sequence: str
    bound: int
    admissible_upto_N: bool
    first_failure: tuple[int, int, Fraction] | None = None

    def to_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            n, k, v = self.first_failure
            failure = {"n": n, "k": k, "value": format_rational(v)}
        return {
            "sequence": self.sequence,
            "bound": self.bound,
            "admissible_upto_N": self.admissible_upto_N,
            "first_failure": failure,
        }


def fnomial(F: FSequence, n: int, k: int) -> FNomialReport:
    """Exact ``n_F! / (k_F! (n-k)_F!)`` as a reduced fraction.

    Evaluated as the falling factorial over ``k_F!``, cancelling common
    factors after every step so intermediates stay small.
    """
    if k < 0 or k > n:
        raise InvalidRange(f"F-nomial needs 0 <= k <= n, got n={n}, k={k}")
    # the smaller of k and n-k gives the same value with fewer factors
    j = min(k, n - k)
    num, den = 1, 1
    for i in range(j):
        num *= value(F, n - i)
        den *= value(F, i + 1)
        g = gcd(num, den)
        num //= g
        den //= g
    if j == 0:
        # F must still be defined through n
        value(F, n)
    return FNomialReport(n, k, Fraction(num, den))


def is_admissible_upto(F: FSequence, N: int = DEFAULT_ADMISSIBILITY_BOUND) -> AdmissibilityReport:
    """Check every F-nomial with ``0 <= k <= n <= N`` is a nonnegative integer.

    This is bounded verification only.  The first failure is reported in
    lexicographic ``(n, k)`` order.
    """
    if N < 0:
        raise InvalidRange(f"bound must be nonnegative, got {N}")
    value(F, N)
    for n in range(N + 1):
        for k in range(n + 1):
            r = fnomial(F, n, k)
            if not (r.is_integer and r.is_nonnegative):
                return AdmissibilityReport(F.name, N, False, (n, k, r.value))
    return AdmissibilityReport(F.name, N, True)


def fnomial_table(F: FSequence, N: int) -> list[list[FNomialReport]]:
    """Rows ``n = 0..N`` of the F-nomial triangle."""
    if N < 0:
        raise InvalidRange(f"table size must be nonnegative, got {N}")
    value(F, N)
    return [[fnomial(F, n, k) for k in range(n + 1)] for n in range(N + 1)]


def table_to_csv(table: list[list[FNomialReport]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "numerator", "denominator", "is_integer"])
    for row in table:
        for r in row:
            w.writerow([r.n, r.k, r.value.numerator, r.value.denominator, str(r.is_integer).lower()])
    return buf.getvalue()


def table_to_json(F: FSequence, table: list[list[FNomialReport]]) -> str:
    doc = {
        "sequence": F.name,
        "N": len(table) - 1,
        "rows": [[r.to_dict() for r in row] for row in table],
    }
    return json.dumps(doc, indent=2) + "\n"


def table_to_text(table: list[list[FNomialReport]]) -> str:
    return "".join(" ".join(format_rational(r.value) for r in row) + "\n" for row in table)
