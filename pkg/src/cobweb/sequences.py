"""F-sequences, F-factorials and F-falling factorials.

An F-sequence replaces the natural number ``k`` by ``k_F = F_k``.  Every
quantity here is an exact Python integer.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .errors import (
    IndexOutOfRange,
    InvalidPermutation,
    InvalidRange,
    InvalidSequence,
)

KINDS = ("natural", "fibonacci", "gaussian", "constant_one", "custom")


@lru_cache(maxsize=None)
def _fib(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FSequence:
    """A natural-number-valued sequence ``k -> F_k``.

    Use the constructors (:meth:`natural`, :meth:`fibonacci`,
    :meth:`gaussian`, :meth:`constant_one`, :meth:`custom`) rather than
    instantiating directly.
    """

    kind: str
    name: str
    q: int | None = None
    f0: int = 0
    values: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSequence(f"unknown sequence kind {self.kind!r}")
        if self.kind == "gaussian" and (self.q is None or self.q < 2):
            raise InvalidSequence("gaussian sequences need an integer q >= 2")
        if self.f0 < 0:
            raise InvalidSequence("F_0 must be nonnegative")
        for k, v in enumerate(self.values, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidSequence(f"F_{k} = {v!r} is not an integer")
            if v <= 0:
                raise InvalidSequence(f"F_{k} = {v} but entries at positive index must be >= 1")

    # -- constructors -----------------------------------------------------

    @classmethod
    def natural(cls) -> FSequence:
        return cls("natural", "natural", f0=0)

    @classmethod
    def fibonacci(cls) -> FSequence:
        return cls("fibonacci", "fibonacci", f0=0)

    @classmethod
    def gaussian(cls, q: int) -> FSequence:
        """Gaussian integers ``(q^n - 1)/(q - 1)``; ``q = 1`` degenerates to natural."""
        if q == 1:
            return cls.natural()
        return cls("gaussian", f"gaussian(q={q})", q=q, f0=0)

    @classmethod
    def constant_one(cls) -> FSequence:
        return cls("constant_one", "constant_one", f0=1)

    @classmethod
    def custom(cls, values: Sequence[int], f0: int = 1, name: str = "custom") -> FSequence:
        return cls("custom", name, f0=f0, values=tuple(values))

    @classmethod
    def from_json(cls, doc: dict | str) -> FSequence:
        """Build a custom sequence from ``{"name", "f0", "values"}``."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict) or "values" not in doc:
            raise InvalidSequence("custom sequence JSON must be an object with a 'values' list")
        values = doc["values"]
        if not isinstance(values, list):
            raise InvalidSequence("'values' must be a list of integers")
        return cls.custom(values, f0=int(doc.get("f0", 1)), name=str(doc.get("name", "custom")))

    @classmethod
    def load(cls, path: str | Path) -> FSequence:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        if self.kind != "custom":
            raise InvalidSequence("only custom sequences have a JSON document form")
        return {"name": self.name, "f0": self.f0, "values": list(self.values)}

    # -- access -----------------------------------------------------------

    @property
    def limit(self) -> int | None:
        """Largest defined index, or None for unbounded built-ins."""
        return len(self.values) if self.kind == "custom" else None

    def __getitem__(self, k: int) -> int:
        return value(self, k)

    def __str__(self):
        return self.name


def value(F: FSequence, k: int) -> int:
    """Return ``k_F = F_k``."""
    if k < 0:
        raise IndexOutOfRange(f"negative index {k}")
    if k == 0:
        return F.f0
    if F.kind == "natural":
        return k
    if F.kind == "fibonacci":
        return _fib(k)
    if F.kind == "gaussian":
        return (F.q**k - 1) // (F.q - 1)
    if F.kind == "constant_one":
        return 1
    if k > len(F.values):
        raise IndexOutOfRange(f"{F.name} is defined only up to index {len(F.values)}, asked for {k}")
    return F.values[k - 1]


def f_factorial(F: FSequence, n: int) -> int:
    """``n_F! = F_1 F_2 ... F_n``; ``0_F! = 1`` whatever F_0 is."""
    if n < 0:
        raise IndexOutOfRange(f"negative index {n}")
    out = 1
    for s in range(1, n + 1):
        out *= value(F, s)
    return out


def falling_factorial(F: FSequence, n: int, k: int) -> int:
    """``F_n F_{n-1} ... F_{n-k+1}``, i.e. ``n_F! / (n-k)_F!``."""
    if k < 0 or k > n:
        raise InvalidRange(f"falling factorial needs 0 <= k <= n, got n={n}, k={k}")
    out = 1
    for s in range(n - k + 1, n + 1):
        out *= value(F, s)
    return out


def check_permutation(sigma: Sequence[int], N: int | None = None) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if N is None:
        N = len(sigma)
    if len(sigma) != N or sorted(sigma) != list(range(1, N + 1)):
        raise InvalidPermutation(f"{list(sigma)} is not a permutation of 1..{N}")
    return sigma


def permute_prefix(F: FSequence, sigma: Sequence[int], N: int | None = None) -> FSequence:
    """Custom sequence G with ``G_k = F_{sigma(k)}`` on 1..N and ``G_0 = F_0``.

    ``sigma`` is given by its images ``(sigma(1), ..., sigma(N))``.
    """
    sigma = check_permutation(sigma, N)
    values = [value(F, s) for s in sigma]
    name = f"{F.name}[sigma={','.join(map(str, sigma))}]"
    return FSequence.custom(values, f0=F.f0, name=name)
