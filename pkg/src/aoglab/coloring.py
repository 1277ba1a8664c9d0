"""Proper colourings of AO graphs and an exact chromatic-number oracle.

Colour layout for t <= k/2: tag ``t_c`` gets colour ``rank(t_c)``; the
diagonal words ``t m t`` get ``d**t + rank(m)``.  For t > k/2 the recursive
colouring reuses the inner colouring for columns and adds one colour, placed
last, for all words whose leading and trailing t-tags coincide.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping

from aoglab.errors import InvalidInputError
from aoglab.graph import ExplicitGraph, ao_matrix_graph, materialize, neighbors
from aoglab.guard import CHROMATIC_ORACLE_MAX, check_size
from aoglab.verdict import Verdict
from aoglab.words import AOParams, Word, enumerate_words, parse_word, render_word, word_rank

SCHEMA_VERSION = 1


@dataclass(frozen=True, eq=False)
class Coloring:
    """Colour per vertex.  Exactly one of ``params`` / ``graph`` is set."""

    assignment: Mapping[Hashable, int]
    palette: int
    params: AOParams | None = None
    graph: ExplicitGraph | None = None

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def class_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for c in self.assignment.values():
            sizes[c] = sizes.get(c, 0) + 1
        return dict(sorted(sizes.items()))


@dataclass
class ChromaticReport:
    lower: int
    upper: int
    exact: int | None = None
    oracle: int | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "oracle": self.oracle,
            "notes": list(self.notes),
        }


# -- constructive colourings -------------------------------------------------


def _theorem3_color(v: Word, t: int, d: int) -> int:
    k = len(v)
    head, tail = v[:t], v[k - t :]
    if head == tail:
        return d**t + word_rank(v[t : k - t], d)
    return word_rank(tail, d)


def recursive_palette(k: int, t: int, d: int) -> int:
    """Colours used by :func:`recursive_coloring` on a graph with word length k, tag length t."""
    if 2 * t <= k:
        return d ** (k - 2 * t) + d**t
    return 1 + recursive_palette(t, 2 * t - k, d)


def _recursive_color(v: Word, t: int, d: int) -> int:
    k = len(v)
    if 2 * t <= k:
        return _theorem3_color(v, t, d)
    head, tail = v[:t], v[k - t :]
    if head == tail:
        return recursive_palette(k, t, d) - 1
    # the trailing tag is a vertex of G(t, d, k - t), whose tag length is 2t - k
    return _recursive_color(tail, 2 * t - k, d)


def _color_all(p: AOParams, rule, palette: int, cap: int | None) -> Coloring:
    assignment = {v: rule(v) for v in enumerate_words(p.k, p.d, cap)}
    return Coloring(assignment, palette, params=p)


def theorem3_coloring(p: AOParams, cap: int | None = None) -> Coloring:
    """Optimal colouring with d**(k-2t) + d**t colours; needs t <= k/2."""
    if 2 * p.t > p.k:
        raise InvalidInputError(f"the theorem3 colouring needs t <= k/2, got {p} with t={p.t}")
    palette = p.d ** (p.k - 2 * p.t) + p.d**p.t
    return _color_all(p, lambda v: _theorem3_color(v, p.t, p.d), palette, cap)


def theorem4_coloring(p: AOParams, cap: int | None = None) -> Coloring:
    """1 + d**t colours, pulled back from G(2t, d, t) through x m z -> x m m z."""
    from aoglab.graph import reduced_embedding

    if 2 * p.t <= p.k:
        raise InvalidInputError(f"the theorem4 colouring needs t > k/2, got {p} with t={p.t}")
    return _color_all(
        p, lambda v: _theorem3_color(reduced_embedding(v, p), p.t, p.d), 1 + p.d**p.t, cap
    )


def recursive_coloring(p: AOParams, cap: int | None = None) -> Coloring:
    palette = recursive_palette(p.k, p.t, p.d)
    return _color_all(p, lambda v: _recursive_color(v, p.t, p.d), palette, cap)


def ao_matrix_coloring(n: int) -> Coloring:
    """Colour v_ij by its column j (0-based colour j - 1)."""
    g = ao_matrix_graph(n)
    return Coloring({v: v[1] - 1 for v in g.vertices}, n, graph=g)


def explicit_coloring(g: ExplicitGraph, colors: list[int]) -> Coloring:
    palette = max(colors, default=-1) + 1
    return Coloring({g.vertices[i]: c for i, c in enumerate(colors)}, palette, graph=g)


# -- verification ------------------------------------------------------------


def verify_coloring(c: Coloring, cap: int | None = None) -> Verdict:
    a = c.assignment
    if c.graph is not None:
        g = c.graph
        vertex_set = set(g.vertices)
        pairs = ((g.vertices[u], g.vertices[v]) for u, v in g.edges)
        label = g.label if g.params is None and g.matrix_order is None else None
        show = (lambda x: g.label(g.index(x))) if label is None else str
    elif c.params is not None:
        p = c.params
        vertex_set = set(enumerate_words(p.k, p.d, cap))
        pairs = _same_color_overlaps(a, vertex_set, p)
        show = lambda x: render_word(x, p.d)  # noqa: E731
    else:
        return Verdict.reject("colouring carries neither params nor a graph")
    for v in sorted(vertex_set, key=str) if c.graph is not None else sorted(vertex_set):
        if v not in a:
            return Verdict.reject(f"vertex {show(v)} has no colour")
        if not isinstance(a[v], int) or not 0 <= a[v] < c.palette:
            return Verdict.reject(f"vertex {show(v)} has colour {a[v]!r} outside palette {c.palette}")
    extra = [x for x in a if x not in vertex_set]
    if extra:
        return Verdict.reject(f"{len(extra)} coloured items are not vertices, e.g. {extra[0]!r}")
    for u, v in pairs:
        if a[u] == a[v]:
            return Verdict.reject(f"edge {show(u)} -- {show(v)} is monochromatic (colour {a[u]})")
    return Verdict.accept(f"proper colouring with palette {c.palette}")


def _same_color_overlaps(a: Mapping, vertex_set: set, p: AOParams) -> Iterator[tuple]:
    """Monochromatic candidate pairs, found per overlap tag.

    Every word ending in tag T is adjacent to every other word starting with
    T, so it is enough to compare colours within each (ends-in-T, starts-with-T)
    block instead of walking neighbour lists.
    """
    starts: dict[Word, dict[int, list[Word]]] = {}
    for w in sorted(vertex_set):
        if w in a:
            starts.setdefault(w[: p.t], {}).setdefault(a[w], []).append(w)
    for v in sorted(vertex_set):
        if v not in a:
            continue
        for w in starts.get(v[p.s :], {}).get(a[v], ()):
            if w != v:
                yield v, w
                return


# -- exact oracles -----------------------------------------------------------


def max_clique(masks: list[int]) -> list[int]:
    """Maximum clique by Bron-Kerbosch with pivoting over bitmask neighbourhoods."""
    best: list[int] = []

    def expand(clique: list[int], cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + bin(cand).count("1") <= len(best):
            return
        pivot_pool = cand | excl
        pivot = max(_bits(pivot_pool), key=lambda u: bin(cand & masks[u]).count("1"))
        for v in _bits(cand & ~masks[pivot]):
            clique.append(v)
            expand(clique, cand & masks[v], excl & masks[v])
            clique.pop()
            cand &= ~(1 << v)
            excl |= 1 << v

    expand([], (1 << len(masks)) - 1, 0)
    return sorted(best)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def chromatic_number_exact_oracle(g: ExplicitGraph, cap: int = CHROMATIC_ORACLE_MAX) -> int:
    return exact_coloring(g, cap)[0]


def exact_coloring(g: ExplicitGraph, cap: int = CHROMATIC_ORACLE_MAX) -> tuple[int, list[int]]:
    """Minimum colouring by branch and bound.

    A maximum clique is precoloured 0..q-1 (this fixes the colour symmetry and
    gives the lower bound).  Remaining vertices are picked by largest number
    of distinct neighbour colours, then descending degree, then index; colours
    are tried in index order, opening at most one new colour per step.
    """
    n = g.n
    check_size(n, cap, what="chromatic oracle input")
    if n == 0:
        return 0, []
    masks = g.masks
    degree = [bin(m).count("1") for m in masks]
    clique = max_clique(masks)
    lower = len(clique)

    colors = [-1] * n
    for c, v in enumerate(clique):
        colors[v] = c
    used = lower

    adj = [list(a) for a in g.adjacency]
    # seen[v][c]: neighbours of v holding colour c; sat[v]: bitmask of such colours
    seen = [[0] * n for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in adj[v]:
            seen[u][c] += 1
            sat[u] |= 1 << c

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = -1
        for u in adj[v]:
            seen[u][c] -= 1
            if not seen[u][c]:
                sat[u] &= ~(1 << c)

    for v in clique:
        c = colors[v]
        colors[v] = -1
        assign(v, c)

    best_k = n + 1
    best_colors: list[int] = []

    def pick() -> int:
        chosen, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                cand = (bin(sat[v]).count("1"), degree[v], -v)
                if key is None or cand > key:
                    chosen, key = v, cand
        return chosen

    def search(remaining: int) -> bool:
        nonlocal best_k, best_colors, used
        if used >= best_k:
            return False
        if remaining == 0:
            best_k, best_colors = used, list(colors)
            return best_k == lower
        v = pick()
        blocked = sat[v]
        for c in range(used):
            if blocked >> c & 1:
                continue
            assign(v, c)
            done = search(remaining - 1)
            unassign(v)
            if done:
                return True
        if used + 1 < best_k:
            used += 1
            assign(v, used - 1)
            done = search(remaining - 1)
            unassign(v)
            used -= 1
            if done:
                return True
        return False

    search(n - lower)
    return best_k, best_colors


def proper_colorings(g: ExplicitGraph, palette: int) -> Iterator[tuple[int, ...]]:
    """Every proper colouring with colours in ``range(palette)`` (labelled, no symmetry breaking)."""
    n, adj = g.n, g.adjacency
    colors = [-1] * n

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        taken = {colors[u] for u in adj[v] if u < v}
        for c in range(palette):
            if c not in taken:
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = -1

    return rec(0)


def matrix_coloring_shape(g: ExplicitGraph, colors: tuple[int, ...]) -> tuple[bool, bool]:
    """(rows monochromatic, columns monochromatic) for a colouring of an AO matrix graph."""
    rows: dict[int, set[int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), c in zip(g.vertices, colors):
        rows.setdefault(i, set()).add(c)
        cols.setdefault(j, set()).add(c)
    return all(len(s) == 1 for s in rows.values()), all(len(s) == 1 for s in cols.values())


def ao_matrix_minimal_coloring_census(n: int) -> dict[str, int]:
    """Count the proper n-colourings of the order-n AO matrix graph by shape."""
    g = ao_matrix_graph(n)
    census = {"total": 0, "rows": 0, "columns": 0, "neither": 0}
    for colors in proper_colorings(g, n):
        census["total"] += 1
        by_rows, by_cols = matrix_coloring_shape(g, colors)
        census["rows"] += by_rows
        census["columns"] += by_cols
        census["neither"] += not (by_rows or by_cols)
    return census


# -- reports -----------------------------------------------------------------

CLIQUE_SEARCH_MAX = 4096


def _clique_lower_bound(p: AOParams) -> tuple[int, str]:
    if p.n_vertices <= CLIQUE_SEARCH_MAX:
        return len(max_clique(materialize(p, cap=-1).masks)), "maximum clique"
    # greedy clique from each of a few seeds via the neighbour oracle
    best = 1
    for seed in itertools.islice(enumerate_words(p.k, p.d, cap=-1), 64):
        clique = [seed]
        for w in neighbors(seed, p):
            if all(w in neighbors(u, p) for u in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best, "greedy clique"


def chromatic_report(
    p: AOParams, use_oracle: bool = False, oracle_cap: int = CHROMATIC_ORACLE_MAX
) -> ChromaticReport:
    oracle = None
    if use_oracle:
        check_size(p.n_vertices, oracle_cap, what=f"chromatic oracle on {p}")
        oracle = chromatic_number_exact_oracle(materialize(p), cap=oracle_cap)
    if 2 * p.t <= p.k:
        exact = p.d ** (p.k - 2 * p.t) + p.d**p.t
        report = ChromaticReport(exact, exact, exact, oracle, [f"exact: d^(k-2t) + d^t = {exact}"])
        return report
    thm4 = 1 + p.d**p.t
    rec = recursive_palette(p.k, p.t, p.d)
    notes = [f"embedding bound 1 + d^t = {thm4}", f"recursive bound f(k,t) = {rec}"]
    upper = min(thm4, rec)
    if oracle is not None:
        notes.append(f"branch-and-bound oracle: {oracle}")
        return ChromaticReport(oracle, oracle, oracle, oracle, notes)
    lower, how = _clique_lower_bound(p)
    notes.append(f"lower bound from {how}: {lower}")
    return ChromaticReport(lower, upper, upper if lower == upper else None, None, notes)


# -- serialization -----------------------------------------------------------


def coloring_to_json(c: Coloring) -> str:
    if c.params is not None:
        params = c.params.as_dict()
        colors = {render_word(v, c.params.d): col for v, col in sorted(c.assignment.items())}
    else:
        g = c.graph
        params = {"matrix_order": g.matrix_order} if g.matrix_order else None
        colors = {g.label(g.index(v)): col for v, col in c.assignment.items()}
    doc = {"schema": SCHEMA_VERSION, "params": params, "palette": c.palette, "colors": colors}
    return json.dumps(doc, indent=1) + "\n"


def coloring_from_json(data: str | bytes) -> Coloring:
    try:
        doc = json.loads(data)
        params, palette, colors = doc["params"], int(doc["palette"]), doc["colors"]
        if params and "matrix_order" in params:
            g = ao_matrix_graph(int(params["matrix_order"]))
            by_label = {g.label(i): v for i, v in enumerate(g.vertices)}
            assignment = {by_label.get(lab, lab): col for lab, col in colors.items()}
            return Coloring(assignment, palette, graph=g)
        p = AOParams(params["k"], params["d"], params["s"])
        assignment = {parse_word(lab): col for lab, col in colors.items()}
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed colouring document: {exc}") from None
    return Coloring(assignment, palette, params=p)
