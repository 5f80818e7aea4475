"""Discrete vector fields on K(Z,1).

Simplices are tuples of nonzero ints (bar entries) or strings in bar
("[3|-2|5]") or b-tuple ("[0,3,1]") notation. Chains are Chain values: a
dimension plus a dict from simplex tuples to int coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Union

from . import _core
from ._core import (
    AdmissibilityViolation,
    BudgetExceeded,
    IterationCapExceeded,
    Kz1Error,
    ParseError,
    PreconditionError,
)

__all__ = [
    "AdmissibilityViolation",
    "BudgetExceeded",
    "Chain",
    "FIELDS",
    "IterationCapExceeded",
    "Kz1Error",
    "ParseError",
    "PreconditionError",
    "catalogue",
    "classify",
    "differential",
    "face",
    "homology",
    "parse",
    "phi",
    "phi_infinity",
    "reach",
    "reduce",
    "to_btuple",
    "trace",
]

FIELDS = ("eml", "bs", "bc", "composed")
DEFAULT_BUDGET = 10_000_000

Simplex = Union[str, Iterable[int]]


def _bar(s: Simplex) -> str:
    if isinstance(s, str):
        return s
    return "[" + "|".join(str(int(a)) for a in s) + "]"


def _tuple(text: str) -> tuple[int, ...]:
    inner = text.strip()[1:-1]
    return tuple(int(a) for a in inner.split("|")) if inner else ()


def parse(s: Simplex) -> tuple[int, ...]:
    """Normalize a simplex to a tuple of bar entries."""
    return _tuple(_core.normalize(_bar(s)))


def to_btuple(s: Simplex) -> tuple[int, ...]:
    text = _core.to_btuple(_bar(s)).strip()[1:-1]
    return tuple(int(a) for a in text.split(",")) if text else ()


def face(i: int, s: Simplex) -> tuple[int, ...]:
    return _tuple(_core.face(i, _bar(s)))


@dataclass(frozen=True)
class Chain:
    dim: int
    terms: Mapping[tuple[int, ...], int] = dc_field(default_factory=dict)

    @classmethod
    def of(cls, *simplices: Simplex, dim: int | None = None) -> "Chain":
        """Sum of simplices with coefficient one."""
        terms: dict[tuple[int, ...], int] = {}
        for s in simplices:
            key = parse(s)
            terms[key] = terms.get(key, 0) + 1
        if dim is None:
            if not terms:
                raise ValueError("an empty chain needs an explicit dim")
            dim = len(next(iter(terms)))
        return cls(dim, {k: v for k, v in terms.items() if v})

    def to_json(self) -> str:
        return json.dumps(
            {
                "dim": self.dim,
                "terms": [{"simplex": list(k), "coeff": str(v)} for k, v in self.terms.items()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Chain":
        data = json.loads(text)
        return cls(
            data["dim"],
            {tuple(int(a) for a in t["simplex"]): int(t["coeff"]) for t in data["terms"]},
        )

    def __bool__(self) -> bool:
        return bool(self.terms)


def _chain(c: Union[Chain, Simplex]) -> Chain:
    return c if isinstance(c, Chain) else Chain.of(c)


def differential(c: Union[Chain, Simplex]) -> Chain:
    return Chain.from_json(_core.differential(_chain(c).to_json()))


def classify(s: Simplex, field: str = "composed") -> dict:
    """Classification as a dict with keys simplex, layer, class, partner, regular_index."""
    return json.loads(_core.classify(_bar(s), field))


def reach(s: Simplex, field: str = "composed", budget: int = DEFAULT_BUDGET) -> dict:
    return json.loads(_core.reach(_bar(s), field, budget))


def trace(s: Simplex, field: str = "composed", max_steps: int = 200) -> list[dict]:
    return json.loads(_core.trace(_bar(s), field, max_steps))


def phi(c: Union[Chain, Simplex], field: str = "composed") -> Chain:
    return Chain.from_json(_core.phi(_chain(c).to_json(), field, False, DEFAULT_BUDGET))


def phi_infinity(c: Union[Chain, Simplex], field: str = "composed", budget: int = DEFAULT_BUDGET) -> Chain:
    return Chain.from_json(_core.phi(_chain(c).to_json(), field, True, budget))


def reduce(map: str, c: Union[Chain, Simplex], field: str = "composed", budget: int = DEFAULT_BUDGET) -> Chain:
    """Apply f, g, or h of the reduction given by a field."""
    return Chain.from_json(_core.reduce(map, _chain(c).to_json(), field, budget))


def homology(field: str = "composed", kmax: int = 5) -> list[str]:
    """Homology groups H_0..H_kmax of the critical complex, as text ("Z", "0", ...)."""
    return [g["text"] for g in json.loads(_core.homology(field, kmax))["groups"]]


def catalogue(s: Simplex) -> list[tuple[str, tuple[int, ...], tuple[int, ...]]]:
    """Predicted (label, face, successor) triples for a bit-chipping target."""
    return [(label, _tuple(f), _tuple(t)) for label, f, t in _core.catalogue(_bar(s))]
