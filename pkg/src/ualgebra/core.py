"""Finite carriers, set-ary operations and the algebra container.

Operations are indexed by a rank: an ordered tuple of distinct labels.  An
argument tuple is always ordered by the rank labels, so a tabulated body is a
dict from element tuples to elements.  Rule-based bodies exist only for the
gallery's infinite carriers; they refuse exhaustive enumeration.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator


class AlgebraError(Exception):
    """Raised for malformed algebra documents or misuse of an algebra."""


class GuardExceeded(AlgebraError):
    """Raised when an enumeration would exceed a configured size guard."""


Rank = tuple[str, ...]


def make_rank(labels) -> Rank:
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise AlgebraError(f"duplicate rank labels: {labels}")
    return labels


@dataclass(frozen=True)
class Carrier:
    """An ordered, non-empty set of distinct element names.

    The order is canonical for the whole process: every tabulation and every
    brute-force enumeration keys on it, so runs are reproducible.
    """

    elements: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.elements:
            raise AlgebraError("empty carrier")
        if len(set(self.elements)) != len(self.elements):
            raise AlgebraError("duplicate element names")
        object.__setattr__(self, "index", {e: i for i, e in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.index

    def assignments(self, rank: Rank) -> Iterator[tuple[str, ...]]:
        """All argument tuples over the rank, in canonical order."""
        return itertools.product(self.elements, repeat=len(rank))


@dataclass(frozen=True)
class Operation:
    """A total set-ary operation, tabulated or rule-based.

    A tabulated body holds exactly ``|A|^|rank|`` rows; a nullary body holds
    one value, keyed by the empty tuple.  ``fn`` supplies a rule-based body
    for gallery algebras on infinite carriers.
    """

    symbol: str
    rank: Rank
    table: dict[tuple, Any] | None = None
    fn: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.table is None) == (self.fn is None):
            raise AlgebraError(f"operation {self.symbol}: need exactly one of table or fn")

    @property
    def is_tabulated(self) -> bool:
        return self.table is not None

    def __call__(self, args: tuple) -> Any:
        if len(args) != len(self.rank):
            raise AlgebraError(
                f"operation {self.symbol}: expected {len(self.rank)} arguments, got {len(args)}"
            )
        if self.table is not None:
            try:
                return self.table[tuple(args)]
            except KeyError:
                raise AlgebraError(f"operation {self.symbol}: no row for {args}") from None
        return self.fn(*args)


@dataclass(frozen=True)
class UnaryMap:
    """A total map A -> A, stored as one value per carrier element in order."""

    carrier: Carrier = field(compare=False)
    values: tuple[str, ...]

    def __call__(self, e: str) -> str:
        return self.values[self.carrier.index[e]]

    def compose(self, other: "UnaryMap") -> "UnaryMap":
        # self after other
        return UnaryMap(self.carrier, tuple(self(v) for v in other.values))

    def is_identity(self) -> bool:
        return self.values == self.carrier.elements

    def is_constant(self) -> bool:
        return len(set(self.values)) == 1

    def __hash__(self):
        return hash(self.values)


def identity_map(carrier: Carrier) -> UnaryMap:
    return UnaryMap(carrier, carrier.elements)


def constant_map(carrier: Carrier, value: str) -> UnaryMap:
    return UnaryMap(carrier, (value,) * len(carrier))


@dataclass(frozen=True)
class Algebra:
    """A carrier plus a non-empty indexed family of operations.

    ``carrier`` is None for rule-based algebras on infinite carriers; those
    additionally carry a ``sampler`` (rng -> element) so law checks can fall
    back to seeded randomized sampling.
    """

    name: str
    carrier: Carrier | None
    ops: tuple[Operation, ...]
    sampler: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.ops:
            raise AlgebraError("empty operation list")
        if self.carrier is None and self.sampler is None:
            raise AlgebraError("rule-based algebra needs a sampler")

    @property
    def is_tabulated(self) -> bool:
        return self.carrier is not None

    def op(self, symbol: str) -> Operation:
        for f in self.ops:
            if f.symbol == symbol:
                return f
        raise AlgebraError(f"no operation named {symbol}")


def validate_algebra(alg: Algebra) -> None:
    """Check every tabulated operation is total and closed over the carrier."""
    if not alg.is_tabulated:
        return
    carrier = alg.carrier
    for f in alg.ops:
        if not f.is_tabulated:
            raise AlgebraError(f"operation {f.symbol}: rule-based body in tabulated algebra")
        expected = len(carrier) ** len(f.rank)
        if len(f.table) != expected:
            raise AlgebraError(
                f"operation {f.symbol}: partial table ({len(f.table)} of {expected} rows)"
            )
        for args, value in f.table.items():
            if len(args) != len(f.rank):
                raise AlgebraError(f"operation {f.symbol}: bad row arity {args}")
            for a in args:
                if a not in carrier:
                    raise AlgebraError(f"operation {f.symbol}: argument outside carrier: {a}")
            if value not in carrier:
                raise AlgebraError(f"operation {f.symbol}: value outside carrier: {value}")


def algebra_from_dict(doc: dict) -> Algebra:
    try:
        elements = doc["elements"]
        op_docs = doc["operations"]
    except KeyError as exc:
        raise AlgebraError(f"missing field {exc}") from None
    carrier = Carrier(tuple(elements))
    ops = []
    for od in op_docs:
        rank = make_rank(od["rank"])
        table = {tuple(row["args"]): row["value"] for row in od["table"]}
        if len(table) != len(od["table"]):
            raise AlgebraError(f"operation {od['symbol']}: duplicate table rows")
        ops.append(Operation(od["symbol"], rank, table=table))
    alg = Algebra(doc.get("name", "algebra"), carrier, tuple(ops))
    validate_algebra(alg)
    return alg


def algebra_to_dict(alg: Algebra) -> dict:
    if not alg.is_tabulated:
        raise AlgebraError("cannot serialize a rule-based algebra")
    return {
        "name": alg.name,
        "elements": list(alg.carrier.elements),
        "operations": [
            {
                "symbol": f.symbol,
                "rank": list(f.rank),
                "table": [
                    {"args": list(args), "value": f.table[args]}
                    for args in alg.carrier.assignments(f.rank)
                ],
            }
            for f in alg.ops
        ],
    }


def load_algebra(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh))


def save_algebra(alg: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_dict(alg), fh, indent=2, sort_keys=True)
        fh.write("\n")
