"""Endomorphism enumeration and analytic representations over a frame.

A frame U: X -> A samples every endomorphism h to the matrix h . U in A^X.
When the sampling is a bijection both ways we invert it into the extension
and tabulate the conjugate function of every element.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .combinator import FunctionTable
from .core import Algebra, AlgebraError, Carrier, GuardExceeded, Rank, UnaryMap, make_rank
from .elementary import elementary_generator

BRUTE_CAP = 100_000

Matrix = tuple  # one carrier element per frame label, in frame order


@dataclass(frozen=True)
class Frame:
    X: Rank
    U: dict[str, str] = field(compare=False)

    def __post_init__(self):
        if set(self.U) != set(self.X):
            raise AlgebraError("frame assignment does not match its index set")

    def columns(self) -> Matrix:
        return tuple(self.U[x] for x in self.X)


def load_frame(path) -> Frame:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return Frame(make_rank(doc["X"]), {row["index"]: row["value"] for row in doc["U"]})


def _indexed_rows(alg: Algebra):
    """Each tabulated op as (table over element indices, rows (args, result))."""
    idx = alg.carrier.index
    out = []
    for g in alg.ops:
        table = {tuple(idx[a] for a in args): idx[v] for args, v in g.table.items()}
        out.append(table)
    return out


def _is_endo(alg: Algebra, values: tuple[int, ...], tables) -> bool:
    for table in tables:
        for args, res in table.items():
            if table[tuple(values[a] for a in args)] != values[res]:
                return False
    return True


def _enumerate_brute(alg: Algebra, cap: int) -> set[UnaryMap]:
    carrier = alg.carrier
    n = len(carrier)
    if n**n > cap:
        raise GuardExceeded(f"brute-force space {n}^{n} exceeds cap {cap}")
    tables = _indexed_rows(alg)
    out = set()
    for values in itertools.product(range(n), repeat=n):
        if _is_endo(alg, values, tables):
            out.add(UnaryMap(carrier, tuple(carrier.elements[v] for v in values)))
    return out


def _enumerate_backtrack(alg: Algebra) -> set[UnaryMap]:
    carrier = alg.carrier
    n = len(carrier)
    tables = _indexed_rows(alg)

    def propagate(h: list) -> bool:
        # derive h(f(args)) = f(h . args) wherever all arguments are assigned
        changed = True
        while changed:
            changed = False
            for table in tables:
                for args, res in table.items():
                    imgs = tuple(h[a] for a in args)
                    if any(v is None for v in imgs):
                        continue
                    forced = table[imgs]
                    if h[res] is None:
                        h[res] = forced
                        changed = True
                    elif h[res] != forced:
                        return False
        return True

    out: set[UnaryMap] = set()

    def search(h: list, pos: int):
        while pos < n and h[pos] is not None:
            pos += 1
        if pos == n:
            out.add(UnaryMap(carrier, tuple(carrier.elements[v] for v in h)))
            return
        for v in range(n):
            trial = list(h)
            trial[pos] = v
            if propagate(trial):
                search(trial, pos + 1)

    seed = [None] * n
    if propagate(seed):
        search(seed, 0)
    return out


def enumerate_endomorphisms(alg: Algebra, method: str = "backtrack",
                            cap: int = BRUTE_CAP) -> set[UnaryMap]:
    if not alg.is_tabulated:
        raise AlgebraError("endomorphism enumeration needs a tabulated algebra; "
                           "gallery algebras supply symbolic families instead")
    if method == "brute":
        return _enumerate_brute(alg, cap)
    if method == "backtrack":
        return _enumerate_backtrack(alg)
    raise AlgebraError(f"unknown method {method!r}")


@dataclass(frozen=True)
class Representation:
    algebra: Algebra
    frame: Frame
    endos: frozenset[UnaryMap]
    sampling: dict[UnaryMap, Matrix] = field(compare=False)
    bijective: bool = False
    failure: dict | None = field(default=None, compare=False)
    extension: dict[Matrix, UnaryMap] | None = field(default=None, compare=False)
    conjugates: dict[str, FunctionTable] | None = field(default=None, compare=False)

    def matrices(self):
        return self.algebra.carrier.assignments(self.frame.X)


def build_representation(alg: Algebra, frame: Frame, endos=None,
                         method: str = "backtrack") -> Representation:
    carrier = alg.carrier
    for v in frame.U.values():
        if v not in carrier:
            raise AlgebraError(f"frame value outside carrier: {v}")
    if endos is None:
        endos = enumerate_endomorphisms(alg, method=method)
    sampling = {h: tuple(h(frame.U[x]) for x in frame.X) for h in endos}

    if not frame.X and len(carrier) > 1:
        # every endomorphism samples to the empty matrix, so only a one-point
        # algebra (where the identity is the sole endomorphism) can work
        return Representation(alg, frame, frozenset(endos), sampling,
                              failure={"reason": "empty frame on a non-trivial "
                                                 "algebra: only the identity "
                                                 "can be recovered",
                                       "matrix": ()})

    by_matrix: dict[Matrix, UnaryMap] = {}
    for h in sorted(endos, key=lambda h: h.values):
        m = sampling[h]
        if m in by_matrix:
            return Representation(alg, frame, frozenset(endos), sampling,
                                  failure={"reason": "not-injective",
                                           "matrix": m,
                                           "endos": (by_matrix[m], h)})
        by_matrix[m] = h
    unhit = [m for m in carrier.assignments(frame.X) if m not in by_matrix]
    if unhit:
        if len(carrier) > 1 and not frame.X:
            reason = "empty frame on a non-trivial algebra: only the identity can be sampled"
        else:
            reason = "not-surjective"
        return Representation(alg, frame, frozenset(endos), sampling,
                              failure={"reason": reason, "matrix": unhit[0]})

    conjugates = {
        a: FunctionTable(carrier, frame.X,
                         {m: by_matrix[m](a) for m in carrier.assignments(frame.X)})
        for a in carrier.elements
    }
    return Representation(alg, frame, frozenset(endos), sampling, bijective=True,
                          extension=by_matrix, conjugates=conjugates)


def conjugate_commutation_defect(rep: Representation, h: UnaryMap) -> tuple[str, Matrix] | None:
    """First (a, M) violating h(chi_a(M)) = chi_a(h . M), or None if none."""
    for a, chi_a in rep.conjugates.items():
        for m in rep.matrices():
            if h(chi_a(m)) != chi_a(tuple(h(v) for v in m)):
                return (a, m)
    return None


def verify_basis_equivalence(alg: Algebra, frame: Frame, rep: Representation | None = None,
                       samples: int = 1000, seed: int = 0,
                       reject_cap: int = BRUTE_CAP) -> dict:
    """Check the biconditional: a single elementary generator exists iff the
    sampling is bijective; when both hold, check the two endomorphism sets
    coincide via the conjugate-commutation identity."""
    if rep is None:
        rep = build_representation(alg, frame)
    gen = elementary_generator(alg, frame)
    report = {
        "generator": gen.status != "not-generator",
        "chi_exists": gen.exists,
        "bijective": rep.bijective,
        "biconditional_ok": gen.exists == rep.bijective,
    }
    if gen.status == "not-generator":
        report["missing_elements"] = sorted(gen.missing)
    if not (gen.exists and rep.bijective):
        if rep.failure:
            report["failure"] = rep.failure["reason"]
        return report

    # the two routes must produce the same conjugate tables
    report["chi_routes_agree"] = all(
        gen.chi[a].table == rep.conjugates[a] for a in alg.carrier.elements
    )

    bad = [h for h in rep.endos if conjugate_commutation_defect(rep, h) is not None]
    report["commutation_members_ok"] = not bad

    carrier = alg.carrier
    n = len(carrier)
    rejected_ok = True
    if n**n <= reject_cap:
        report["nonmember_check"] = "exhaustive"
        for values in itertools.product(carrier.elements, repeat=n):
            h = UnaryMap(carrier, values)
            if h in rep.endos:
                continue
            if conjugate_commutation_defect(rep, h) is None:
                rejected_ok = False
                report["nonmember_witness_missing"] = values
                break
    else:
        report["nonmember_check"] = f"sampled:{samples}:seed={seed}"
        rng = random.Random(seed)
        for _ in range(samples):
            values = tuple(rng.choice(carrier.elements) for _ in range(n))
            h = UnaryMap(carrier, values)
            if h in rep.endos:
                continue
            if conjugate_commutation_defect(rep, h) is None:
                rejected_ok = False
                report["nonmember_witness_missing"] = values
                break
    report["nonmembers_rejected"] = rejected_ok
    report["e_chi_equals_e_alpha"] = report["commutation_members_ok"] and rejected_ok
    return report
