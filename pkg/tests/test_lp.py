from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gea.algebra import induced_order
from gea.lp import LinearProgram, basic_solution_feasible, lp_feasible
from gea.states import additivity_program


def test_single_pinned_variable():
    program = LinearProgram.build(1, [((1,), 1)])
    assert lp_feasible(program) == [Fraction(1)]


def test_sign_contradiction_is_infeasible():
    program = LinearProgram.build(2, [((1, 1), 1), ((1, -1), 3)])
    assert lp_feasible(program) is None
    assert basic_solution_feasible(program) is None


def test_excd_normalized_witness_program(excd):
    program = additivity_program(
        excd, [({1: Fraction(1), 2: Fraction(-1)}, Fraction(1))])
    solution = lp_feasible(program)
    assert solution == [Fraction(1), Fraction(0)]
    assert basic_solution_feasible(program) is not None


def test_empty_program_is_feasible_at_zero():
    program = LinearProgram.build(3, [])
    assert lp_feasible(program) == [Fraction(0)] * 3


def test_zero_rows_with_nonzero_rhs_infeasible():
    program = LinearProgram.build(2, [((0, 0), 1)])
    assert lp_feasible(program) is None
    assert basic_solution_feasible(program) is None


def test_solution_is_exact_on_awkward_fractions():
    program = LinearProgram.build(
        2, [((Fraction(1, 3), Fraction(1, 7)), Fraction(2, 21))])
    solution = lp_feasible(program)
    assert solution is not None
    assert program.satisfied_by(solution)


def _pair_programs(table):
    order = induced_order(table)
    for a, b in order.pairs_not_leq():
        yield additivity_program(
            table, [({a: Fraction(1), b: Fraction(-1)}, Fraction(1))])
    for a in range(table.n):
        for b in range(a + 1, table.n):
            for lo, hi in ((a, b), (b, a)):
                yield additivity_program(
                    table, [({lo: Fraction(1), hi: Fraction(-1)}, Fraction(1))])


def test_simplex_matches_oracle_on_corpus_pairs(valid_corpus):
    checked = 0
    for name, table in valid_corpus.items():
        if table.n > 6:
            continue
        for program in _pair_programs(table):
            simplex = lp_feasible(program)
            oracle = basic_solution_feasible(program)
            assert (simplex is None) == (oracle is None), (name, program)
            checked += 1
    assert checked > 30


coeff = st.integers(min_value=-3, max_value=3)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.lists(coeff, min_size=n, max_size=n), coeff),
                 min_size=0, max_size=4))))
def test_simplex_matches_oracle_on_random_programs(case):
    n, rows = case
    program = LinearProgram.build(n, rows)
    simplex = lp_feasible(program)
    oracle = basic_solution_feasible(program)
    assert (simplex is None) == (oracle is None)
    if simplex is not None:
        assert program.satisfied_by(simplex)
        assert all(v >= 0 for v in simplex)
