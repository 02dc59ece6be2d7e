import itertools

from ualgebra.combinator import constant_fn, projection
from ualgebra.core import Algebra, Carrier, Operation
from ualgebra.elementary import (
    elementary_closure,
    elementary_generator,
    generated_subuniverse,
    rankless,
    term_table,
)
from ualgebra.representation import Frame


def brute_closure_tables(alg, Y, max_depth=4):
    """Independent oracle: evaluate every term up to a fixed depth.

    Grows terms level by level instead of deduplicating tables inside a
    worklist, so it shares no code with the production closure.
    """
    levels = [{projection(alg.carrier, Y, x) for x in Y}]
    for _ in range(max_depth):
        current = set().union(*levels)
        nxt = set()
        for g in alg.ops:
            for combo in itertools.product(sorted(current, key=lambda t: t.key()),
                                           repeat=len(g.rank)):
                table = {
                    args: g(tuple(t(args) for t in combo))
                    for args in alg.carrier.assignments(Y)
                }
                from ualgebra.combinator import FunctionTable
                nxt.add(FunctionTable(alg.carrier, Y, table))
        levels.append(nxt)
    return set().union(*levels)


def test_semilattice_unary_closure(semilattice2):
    alg, _frame = semilattice2
    result = elementary_closure(alg, ("p",))
    assert result.complete
    tables = result.tables()
    assert tables == brute_closure_tables(alg, ("p",))
    # only the identity and the constant-empty map are reachable
    assert len(tables) == 2
    assert projection(alg.carrier, ("p",), "p") in tables
    assert constant_fn(alg.carrier, "{}", ("p",)) in tables


def test_boolean_unary_closure(boolean):
    alg, _frame = boolean
    result = elementary_closure(alg, ("p",))
    tables = result.tables()
    assert tables == brute_closure_tables(alg, ("p",))
    assert len(tables) == 4  # identity, complement, both constants


def test_empty_arity_without_nullary():
    carrier = Carrier(("a", "b"))
    alg = Algebra("no-nullary", carrier, (
        Operation("f", ("l", "r"), table={
            (x, y): "a" for x in carrier.elements for y in carrier.elements
        }),
    ))
    assert elementary_closure(alg, ()).tables() == set()


def test_empty_arity_with_nullary(semilattice2):
    alg, _frame = semilattice2
    tables = elementary_closure(alg, ()).tables()
    assert tables == {constant_fn(alg.carrier, "{}", ())}


def test_witness_terms_reproduce_tables(semilattice2, boolean):
    for alg, _frame in (semilattice2, boolean):
        for Y in (("p",), ("p", "q")):
            for ef in elementary_closure(alg, Y).functions:
                assert term_table(alg, ef.witness, Y) == ef.table


def test_projections_always_members(semilattice2, boolean):
    for alg, _frame in (semilattice2, boolean):
        for Y in (("p",), ("p", "q")):
            tables = elementary_closure(alg, Y).tables()
            for x in Y:
                assert projection(alg.carrier, Y, x) in tables


def test_guard_abandons():
    carrier = Carrier(("a", "b", "c"))
    # a random-ish binary op generates lots of distinct term functions
    values = ("b", "c", "a", "c", "a", "b", "a", "b", "c")
    table = dict(zip(itertools.product(carrier.elements, repeat=2), values))
    alg = Algebra("wild", carrier, (Operation("f", ("l", "r"), table=table),))
    result = elementary_closure(alg, ("p", "q"), guard=5)
    assert not result.complete


def test_rankless_semilattice(semilattice2):
    alg, _frame = semilattice2
    maps = rankless(alg)
    assert {m.values for m in maps} == {
        alg.carrier.elements,                       # identity
        ("{}",) * 4,                                # constant empty
    }


def test_rankless_boolean(boolean):
    alg, _frame = boolean
    assert len(rankless(alg)) == 4


def test_rankless_only_nullary():
    carrier = Carrier(("a", "b"))
    alg = Algebra("consts", carrier, (Operation("c", (), table={(): "b"}),))
    maps = rankless(alg)
    assert {m.values for m in maps} == {("a", "b"), ("b", "b")}


def test_generated_subuniverse(semilattice2, boolean):
    alg, frame = semilattice2
    assert generated_subuniverse(alg, frame) == set(alg.carrier.elements)
    # the top-less singleton frame misses the atoms
    small = Frame(("u",), {"u": "{x,y}"})
    assert generated_subuniverse(alg, small) == {"{}", "{x,y}"}
    balg, bframe = boolean
    assert generated_subuniverse(balg, bframe) == set(balg.carrier.elements)
    # an empty frame reaches only the nullary closure
    empty = Frame((), {})
    assert generated_subuniverse(alg, empty) == {"{}"}


def test_generator_semilattice(semilattice2):
    alg, frame = semilattice2
    result = elementary_generator(alg, frame)
    assert result.exists
    top = result.chi["{x,y}"]
    for M in alg.carrier.assignments(frame.X):
        union = alg.op("union")
        assert top.table(M) == union(M)
    # the defining identity: chi at l(U) coincides with l, for every elementary l
    closure = elementary_closure(alg, frame.X)
    for ef in closure.functions:
        at_frame = ef.table(frame.columns())
        assert result.chi[at_frame].table == ef.table


def test_generator_boolean(boolean):
    alg, frame = boolean
    result = elementary_generator(alg, frame)
    assert result.exists
    assert result.chi["top"].table == constant_fn(alg.carrier, "top", frame.X)


def test_not_generator_diagnosis(semilattice2):
    alg, _frame = semilattice2
    result = elementary_generator(alg, Frame(("u",), {"u": "{x,y}"}))
    assert result.status == "not-generator"
    assert result.missing == {"{x}", "{y}"}


def test_not_independent_diagnosis():
    # one generator, one idempotent unary op: both x and u(x) reach the same
    # element while the witnessing terms have different tables
    carrier = Carrier(("a", "b"))
    alg = Algebra("dep", carrier, (
        Operation("u", ("p",), table={("a",): "b", ("b",): "b"}),
    ))
    result = elementary_generator(alg, Frame(("x", "y"), {"x": "a", "y": "b"}))
    assert result.status == "not-independent"
    ell, ell2 = result.witness
    U = ("a", "b")
    assert ell.table(U) == ell2.table(U)
    assert ell.table != ell2.table
