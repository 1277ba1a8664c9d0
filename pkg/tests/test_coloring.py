import itertools

import pytest
from hypothesis import given, settings, strategies as st

from aoglab.coloring import (
    Coloring,
    ao_matrix_coloring,
    ao_matrix_minimal_coloring_census,
    chromatic_number_exact_oracle,
    chromatic_report,
    coloring_from_json,
    coloring_to_json,
    exact_coloring,
    max_clique,
    recursive_coloring,
    recursive_palette,
    theorem3_coloring,
    theorem4_coloring,
    verify_coloring,
)
from aoglab.errors import InvalidInputError, SizeGuardError
from aoglab.graph import ExplicitGraph, ao_matrix_graph, materialize
from aoglab.words import AOParams, enumerate_words


def naive_chromatic(g: ExplicitGraph) -> int:
    """Smallest c admitting a proper colouring, by trying all c**n assignments."""
    for c in range(1, g.n + 1):
        for colors in itertools.product(range(c), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return c
    return 0


def triangle() -> ExplicitGraph:
    return ExplicitGraph((0, 1, 2), ((0, 1), (0, 2), (1, 2)))


graphs = st.integers(1, 8).flatmap(
    lambda n: st.sets(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])
    ).map(lambda es: ExplicitGraph(tuple(range(n)), tuple(sorted(es))))
)


# -- constructions -----------------------------------------------------------


@pytest.mark.parametrize("k,d,s,palette", [(2, 2, 1, 3), (4, 2, 2, 5), (3, 3, 2, 6), (3, 2, 2, 4), (2, 3, 1, 4)])
def test_theorem3_palette_and_properness(k, d, s, palette):
    c = theorem3_coloring(AOParams(k, d, s))
    assert c.palette == palette
    assert c.colors_used == palette
    assert verify_coloring(c)


def test_theorem3_precondition():
    with pytest.raises(InvalidInputError):
        theorem3_coloring(AOParams(3, 2, 1))


def test_theorem3_layout():
    p = AOParams(4, 2, 2)
    c = theorem3_coloring(p).assignment
    assert c[(0, 1, 1, 0)] == 2  # off-diagonal: rank of trailing tag "ba"
    assert c[(1, 1, 1, 1)] == 4  # diagonal: offset d**t, empty middle


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ao_matrix_column_coloring(n):
    c = ao_matrix_coloring(n)
    assert c.palette == n and c.colors_used == n
    assert verify_coloring(c)


def test_recursive_g522():
    p = AOParams(5, 2, 2)
    c = recursive_coloring(p)
    assert c.palette == 5 and c.colors_used == 5
    assert verify_coloring(c)
    assert theorem4_coloring(p).palette == 9
    assert verify_coloring(theorem4_coloring(p))


def test_recursive_g722():
    assert recursive_palette(7, 5, 2) == 6
    assert recursive_palette(5, 3, 2) == 5
    assert recursive_palette(3, 1, 2) == 4
    c = recursive_coloring(AOParams(7, 2, 2))
    assert c.palette == 6
    assert verify_coloring(c)


@pytest.mark.parametrize(
    "p",
    [AOParams(k, d, s) for d in (1, 2, 3, 4) for k in range(2, 13) for s in range(1, k) if d**k <= 4096],
    ids=str,
)
def test_recursive_always_proper(p):
    c = recursive_coloring(p)
    assert verify_coloring(c)
    assert c.palette == recursive_palette(p.k, p.t, p.d)
    assert max(c.assignment.values()) < c.palette


@pytest.mark.parametrize(
    "p",
    [AOParams(k, d, s) for d in (2, 3, 4) for k in range(2, 13) for s in range(1, k) if d**k <= 1024 and 2 * (k - s) > k],
    ids=str,
)
def test_theorem4_always_proper(p):
    c = theorem4_coloring(p)
    assert c.palette == 1 + p.d**p.t
    assert verify_coloring(c)


# -- verifier ----------------------------------------------------------------


def test_verify_rejects_monochromatic_edge():
    p = AOParams(3, 2, 1)
    c = Coloring({v: 0 for v in enumerate_words(3, 2)}, 1, params=p)
    verdict = verify_coloring(c)
    assert not verdict and "monochromatic" in verdict.message


def test_verify_rejects_partial_and_out_of_palette():
    c = theorem3_coloring(AOParams(2, 2, 1))
    partial = dict(c.assignment)
    del partial[(0, 0)]
    assert "no colour" in verify_coloring(Coloring(partial, c.palette, params=c.params)).message
    wide = dict(c.assignment)
    wide[(0, 0)] = 7
    assert "outside palette" in verify_coloring(Coloring(wide, c.palette, params=c.params)).message
    extra = dict(c.assignment)
    extra[(5, 5)] = 0
    assert not verify_coloring(Coloring(extra, c.palette, params=c.params))


def test_verify_explicit_graph():
    g = triangle()
    assert not verify_coloring(Coloring({0: 0, 1: 1, 2: 0}, 2, graph=g))
    assert verify_coloring(Coloring({0: 0, 1: 1, 2: 2}, 3, graph=g))


# -- oracle ------------------------------------------------------------------


def test_oracle_examples():
    assert chromatic_number_exact_oracle(triangle()) == 3
    assert chromatic_number_exact_oracle(ao_matrix_graph(4)) == 4
    assert chromatic_number_exact_oracle(materialize(AOParams(2, 2, 1))) == 3
    assert chromatic_number_exact_oracle(ExplicitGraph((), ())) == 0
    assert chromatic_number_exact_oracle(ExplicitGraph((0, 1), ())) == 1


def test_oracle_guard():
    with pytest.raises(SizeGuardError):
        chromatic_number_exact_oracle(materialize(AOParams(7, 2, 1)))


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_oracle_agrees_with_naive_search(g):
    k, colors = exact_coloring(g)
    assert k == naive_chromatic(g)
    assert all(colors[u] != colors[v] for u, v in g.edges)
    assert max(colors, default=-1) + 1 == k


@settings(max_examples=100, deadline=None)
@given(graphs)
def test_max_clique_agrees_with_enumeration(g):
    best = max(
        (r for r in range(g.n + 1) for sub in itertools.combinations(range(g.n), r)
         if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2))),
        default=0,
    )
    clique = max_clique(g.masks)
    assert len(clique) == best
    assert all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


@pytest.mark.parametrize("k,d,s", [(2, 2, 1), (3, 2, 2), (3, 2, 1)])
def test_oracle_agrees_with_naive_on_ao_graphs(k, d, s):
    g = materialize(AOParams(k, d, s))
    assert chromatic_number_exact_oracle(g) == naive_chromatic(g)


# Colourings with fewer colours exist for these: every colour class of the
# form {t_a m t_c : t_a in A, t_c in B} with A, B disjoint tag sets is
# independent, and d**t tags can be split that way with fewer than d**t colours.
THEOREM3_COUNTEREXAMPLES = {
    (2, 5, 1): 5,
    (2, 6, 1): 5,
    (2, 7, 1): 6,
    (2, 8, 1): 6,
    (6, 2, 3): 6,
}
SLOW = {(6, 2, 3), (6, 2, 4), (3, 4, 2), (2, 8, 1), (2, 7, 1)}


def _theorem3_cases():
    for d in range(2, 9):
        for k in range(2, 7):
            for s in range(1, k):
                if d**k > 64 or 2 * (k - s) > k:
                    continue
                marks = []
                if (k, d, s) in THEOREM3_COUNTEREXAMPLES:
                    marks.append(
                        pytest.mark.xfail(
                            strict=True,
                            raises=FormulaMismatch,
                            reason=f"chi is {THEOREM3_COUNTEREXAMPLES[(k, d, s)]}",
                        )
                    )
                if (k, d, s) in SLOW:
                    marks.append(pytest.mark.slow)
                yield pytest.param(k, d, s, marks=marks, id=f"G({k},{d},{s})")


class FormulaMismatch(AssertionError):
    """Only this failure counts as the expected one for a known counterexample."""


@pytest.mark.parametrize("k,d,s", list(_theorem3_cases()))
def test_oracle_equals_exact_formula(k, d, s):
    p = AOParams(k, d, s)
    formula = d ** (k - 2 * p.t) + d**p.t
    assert theorem3_coloring(p).colors_used == formula
    g = materialize(p)
    chi, colors = exact_coloring(g)
    # the oracle's own colouring goes back through the independent verifier
    assert verify_coloring(Coloring(dict(zip(g.vertices, colors)), chi, params=p))
    assert chi == THEOREM3_COUNTEREXAMPLES.get((k, d, s), formula)
    if chi != formula:
        raise FormulaMismatch(f"oracle chi {chi} < formula {formula} for {p}")


@pytest.mark.parametrize(
    "k,d,s",
    [(k, d, s) for d in range(2, 9) for k in range(2, 7) for s in range(1, k) if d**k <= 64 and 2 * (k - s) > k],
)
def test_oracle_below_recursive_bound(k, d, s):
    p = AOParams(k, d, s)
    f = recursive_palette(k, p.t, d)
    assert chromatic_number_exact_oracle(materialize(p)) <= f <= 1 + d**p.t


def test_ao_matrix_order3_minimal_colorings_are_rows_or_columns():
    census = ao_matrix_minimal_coloring_census(3)
    assert census["total"] == 12
    assert census["neither"] == 0


@pytest.mark.xfail(strict=True, reason="2688 of 2736 proper 4-colourings are neither")
def test_ao_matrix_order4_minimal_colorings_are_rows_or_columns():
    census = ao_matrix_minimal_coloring_census(4)
    assert census["neither"] == 0


def test_ao_matrix_order4_census():
    assert ao_matrix_minimal_coloring_census(4) == {
        "total": 2736, "rows": 24, "columns": 24, "neither": 2688
    }


def test_ao_matrix_rectangle_coloring():
    """Colour classes A x B with A, B disjoint: order 5 needs only 4 colours,
    because the 6 two-element subsets of {0,1,2,3} pair off into complements."""
    g = ao_matrix_graph(5)
    subsets = [frozenset(c) for c in itertools.combinations(range(4), 2)][:5]
    # v_ij gets a colour in subsets[i] but not in subsets[j]
    assignment = {(i, j): min(subsets[i - 1] - subsets[j - 1]) for i, j in g.vertices}
    c = Coloring(assignment, 4, graph=g)
    assert verify_coloring(c)
    assert chromatic_number_exact_oracle(g) == 4


@pytest.mark.parametrize("n,chi", [(3, 3), (4, 4), (5, 4), (6, 4), (7, 5)])
def test_ao_matrix_chromatic_numbers(n, chi):
    from math import comb

    assert min(c for c in range(1, 10) if comb(c, c // 2) >= n) == chi
    assert chromatic_number_exact_oracle(ao_matrix_graph(n)) == chi


@pytest.mark.parametrize("k,s", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)])
def test_oracle_monotone_in_alphabet(k, s):
    values = [
        chromatic_number_exact_oracle(materialize(AOParams(k, d, s)))
        for d in range(2, 5)
        if d**k <= 32
    ]
    assert values == sorted(values)


# -- reports -----------------------------------------------------------------


def test_report_exact_regime():
    r = chromatic_report(AOParams(3, 2, 2))
    assert (r.exact, r.lower, r.upper) == (4, 4, 4)
    assert chromatic_report(AOParams(2, 3, 1)).exact == 4


def test_report_bound_regime():
    r = chromatic_report(AOParams(5, 2, 2))
    assert r.upper == 5 and r.exact is None
    assert 3 <= r.lower <= r.upper
    with_oracle = chromatic_report(AOParams(5, 2, 2), use_oracle=True)
    assert with_oracle.exact == with_oracle.oracle == 4
    assert with_oracle.lower <= with_oracle.upper


def test_report_oracle_guard():
    with pytest.raises(SizeGuardError):
        chromatic_report(AOParams(7, 2, 2), use_oracle=True)


def test_report_large_uses_greedy_clique():
    r = chromatic_report(AOParams(13, 2, 1))
    assert r.upper == 1 + 2**12 or r.upper == recursive_palette(13, 12, 2)
    assert r.lower >= 3


@pytest.mark.parametrize(
    "c", [theorem3_coloring(AOParams(3, 2, 2)), recursive_coloring(AOParams(5, 2, 2)), ao_matrix_coloring(4)]
)
def test_coloring_json_round_trip(c):
    back = coloring_from_json(coloring_to_json(c))
    assert dict(back.assignment) == dict(c.assignment)
    assert back.palette == c.palette
    assert verify_coloring(back)


@pytest.mark.parametrize(
    "p", [AOParams(k, d, s) for d in (2, 3) for k in range(2, 7) for s in range(1, k) if d**k <= 243], ids=str
)
def test_recursive_proper_on_brute_edges(p):
    from conftest import brute_edges

    colors = recursive_coloring(p).assignment
    assert all(colors[v] != colors[w] for v, w in brute_edges(p.k, p.d, p.s))


def test_verifier_catches_single_conflict():
    p = AOParams(5, 2, 2)
    colors = dict(recursive_coloring(p).assignment)
    v, w = (0, 0, 0, 0, 1), (0, 0, 1, 1, 1)  # suffix "001" = prefix "001"
    colors[w] = colors[v]
    verdict = verify_coloring(Coloring(colors, 5, params=p))
    assert not verdict and "aaaab" in verdict.message and "aabbb" in verdict.message
