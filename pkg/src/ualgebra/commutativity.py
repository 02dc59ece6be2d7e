"""Medial-law checking for operation pairs, elementary functions and conjugates.

Two operations f: A^R -> A and g: A^S -> A commute when
f(g . m) = g(f . c_m) for every m: R -> A^S.  Tabulated pairs are checked
exhaustively in canonical order (first counterexample wins, so witnesses are
reproducible); rule-based pairs fall back to seeded randomized sampling.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .combinator import FunctionTable
from .core import Algebra, GuardExceeded, Operation
from .elementary import DEFAULT_GUARD, elementary_closure
from .representation import Representation

PAIR_GUARD = 2_000_000


def _rank_of(op):
    return op.rank if isinstance(op, Operation) else op.arity


def _name_of(op):
    return op.symbol if isinstance(op, Operation) else "<table>"


@dataclass(frozen=True)
class MedialReport:
    pair: tuple[str, str]
    holds: bool
    mode: str
    witness: tuple | None = None  # (m rows ordered by R, lhs, rhs)


def medial_check(f, g, m_rows) -> tuple | None:
    """Evaluate both sides of the medial law at one m (rows ordered by f's rank)."""
    R = _rank_of(f)
    S = _rank_of(g)
    lhs = f(tuple(g(row) for row in m_rows))
    rhs = g(tuple(f(tuple(row[j] for row in m_rows)) for j in range(len(S))))
    if lhs != rhs:
        return (m_rows, lhs, rhs)
    return None


def ops_commute(f, g, carrier=None, sampler=None, samples: int = 1000,
                seed: int = 0, guard: int = PAIR_GUARD) -> MedialReport:
    R = _rank_of(f)
    S = _rank_of(g)
    name = (_name_of(f), _name_of(g))
    if carrier is not None:
        total = len(carrier) ** (len(R) * len(S))
        if total > guard:
            raise GuardExceeded(f"medial check for {name} needs {total} cases")
        for m_rows in itertools.product(
                itertools.product(carrier.elements, repeat=len(S)), repeat=len(R)):
            bad = medial_check(f, g, m_rows)
            if bad is not None:
                return MedialReport(name, False, "exhaustive", bad)
        return MedialReport(name, True, "exhaustive")

    rng = random.Random(seed)
    mode = f"sampled:{samples}:seed={seed}"
    for _ in range(samples):
        m_rows = tuple(tuple(sampler(rng) for _ in S) for _ in R)
        bad = medial_check(f, g, m_rows)
        if bad is not None:
            return MedialReport(name, False, mode, bad)
    return MedialReport(name, True, mode)


def is_commutative(alg: Algebra, samples: int = 1000, seed: int = 0,
                   both_directions: bool = False) -> tuple[bool, list[MedialReport]]:
    """Check the medial law for every pair of fundamental operations.

    Symmetry of the law halves the work; ``both_directions`` re-asserts it
    anyway (used by the test suite).
    """
    reports = []
    ok = True
    kwargs = dict(samples=samples, seed=seed)
    for i, f in enumerate(alg.ops):
        for j, g in enumerate(alg.ops):
            if j < i and not both_directions:
                continue
            rep = ops_commute(f, g, carrier=alg.carrier, sampler=alg.sampler, **kwargs)
            reports.append(rep)
            ok = ok and rep.holds
    return ok, reports


def check_closure_commutation(alg: Algebra, Y, guard: int = DEFAULT_GUARD,
                      samples: int = 1000, seed: int = 0) -> dict:
    """All pairs of Y-ary elementary functions of a commutative algebra commute."""
    commutative, _ = is_commutative(alg, samples=samples, seed=seed)
    if not commutative:
        return {"status": "skipped", "reason": "algebra is not commutative"}
    closure = elementary_closure(alg, tuple(Y), guard=guard)
    if not closure.complete:
        return {"status": "guard-exceeded", "size": len(closure.functions)}
    tables = [ef.table for ef in closure.functions]
    failures = []
    for f in tables:
        for g in tables:
            rep = ops_commute(f, g, carrier=alg.carrier)
            if not rep.holds:
                failures.append(rep)
    # base case: fundamental ops against every projection
    projection_failures = []
    proj = [ef.table for ef in closure.functions if ef.witness[0] == "proj"]
    for f in alg.ops:
        for p in proj:
            rep = ops_commute(f, p, carrier=alg.carrier)
            if not rep.holds:
                projection_failures.append(rep)
    ok = not failures and not projection_failures
    return {
        "status": "pass" if ok else "fail",
        "closure_size": len(tables),
        "pair_failures": failures,
        "projection_failures": projection_failures,
    }


def check_conjugate_commutation(rep: Representation, guard: int = PAIR_GUARD) -> dict:
    """The conjugate algebra of a commutative based algebra is commutative."""
    if not rep.bijective:
        return {"status": "skipped", "reason": "sampling is not bijective"}
    failures = []
    for a, chi_a in rep.conjugates.items():
        for b, chi_b in rep.conjugates.items():
            r = ops_commute(chi_a, chi_b, carrier=rep.algebra.carrier, guard=guard)
            if not r.holds:
                failures.append((a, b, r))
    return {"status": "pass" if not failures else "fail",
            "pairs": len(rep.conjugates) ** 2,
            "failures": failures}
