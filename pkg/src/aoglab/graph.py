"""The implicit AO graph, AO matrix graphs, the reduced embedding, and exporters.

Most algorithms only need :func:`neighbors`; :func:`materialize` builds an
explicit edge list for the brute-force oracles and for export.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Sequence

from aoglab.errors import InvalidInputError
from aoglab.guard import check_size
from aoglab.words import (
    AOParams,
    Word,
    check_word,
    enumerate_words,
    parse_word,
    render_word,
    word_rank,
)

SCHEMA_VERSION = 1
EXPORT_FORMATS = ("json", "dot", "edgelist")


@dataclass(frozen=True)
class ExplicitGraph:
    """A simple undirected graph on vertices ``0..n-1`` with hashable labels.

    ``vertices[i]`` is a word when ``params`` is set and a 1-based pair
    ``(i, j)`` for AO matrix graphs (``matrix_order`` set).
    """

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[int, int], ...]
    params: AOParams | None = None
    matrix_order: int | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.vertices)
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise InvalidInputError(f"edge ({u}, {v}) is not of the form i < j < {n}")
            if (u, v) in seen:
                raise InvalidInputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        index = {label: i for i, label in enumerate(self.vertices)}
        if len(index) != n:
            raise InvalidInputError("vertex labels are not distinct")
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, label: Hashable) -> int:
        return self._index[label]

    @cached_property
    def adjacency(self) -> list[frozenset[int]]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return [frozenset(a) for a in adj]

    @cached_property
    def masks(self) -> list[int]:
        """Open neighbourhoods as bitmasks, for the exponential oracles."""
        return [sum(1 << j for j in a) for a in self.adjacency]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, i: int) -> str:
        x = self.vertices[i]
        if self.params is not None:
            return render_word(x, self.params.d)
        if self.matrix_order is not None:
            return f"v{x[0]}_{x[1]}"
        return str(x)

    def induced(self, keep: Sequence[int]) -> ExplicitGraph:
        keep = sorted(keep)
        pos = {old: new for new, old in enumerate(keep)}
        edges = tuple(
            sorted((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        )
        return ExplicitGraph(tuple(self.vertices[i] for i in keep), edges)


def neighbors(v: Word, p: AOParams) -> list[Word]:
    """Sorted neighbour list of ``v`` in G(k, d, s)."""
    check_word(v, p.k, p.d)
    v = tuple(v)
    head, tail = v[: p.t], v[p.s :]
    out = set()
    for y in itertools.product(range(p.d), repeat=p.s):
        out.add(tail + y)
        out.add(y + head)
    out.discard(v)
    return sorted(out)


def degree(v: Word, p: AOParams) -> int:
    return len(neighbors(v, p))


def edge_count_enumerated(p: AOParams, cap: int | None = None) -> int:
    total = sum(len(neighbors(v, p)) for v in enumerate_words(p.k, p.d, cap))
    assert total % 2 == 0
    return total // 2


def edge_count_formula_s1(k: int, d: int) -> int:
    """Closed-form edge count of G(k, d, 1): constant words have degree 2d-2,
    period-2 words 2d-1, everything else 2d."""
    if k < 2 or d < 1:
        raise InvalidInputError(f"formula needs k >= 2 and d >= 1, got k={k}, d={d}")
    doubled = 2 * d * (d**k - d - d * (d - 1)) + (2 * d - 1) * d * (d - 1) + (2 * d - 2) * d
    return doubled // 2


def materialize(p: AOParams, cap: int | None = None) -> ExplicitGraph:
    """Explicit G(k, d, s); vertex ``i`` is the word of lexicographic rank ``i``."""
    words = list(enumerate_words(p.k, p.d, cap))
    edges = []
    for i, v in enumerate(words):
        for w in neighbors(v, p):
            j = word_rank(w, p.d)
            if i < j:
                edges.append((i, j))
    edges.sort()
    return ExplicitGraph(tuple(words), tuple(edges), params=p)


def matrix_adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (x, y) = a, b
    return a != b and (x == j or i == y)


def ao_matrix_graph(n: int) -> ExplicitGraph:
    """AO matrix graph of order n: vertices v_ij (i != j), v_ij ~ v_xy iff x = j or i = y."""
    if n < 2:
        raise InvalidInputError(f"AO matrix graph needs n >= 2, got {n}")
    verts = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(len(verts)), 2)
        if matrix_adjacent(verts[a], verts[b])
    ]
    return ExplicitGraph(tuple(verts), tuple(edges), matrix_order=n)


def matrix_vertex_to_word(v: tuple[int, int]) -> Word:
    """The bijection v_ij <-> (i-1, j-1) onto G(2, n, 1)."""
    return (v[0] - 1, v[1] - 1)


def reduced_embedding(v: Word, p: AOParams) -> Word:
    """Map ``x m z`` in G(k, d, s) to ``x m m z`` in G(2t, d, t); requires t > k/2."""
    if not 2 * p.t > p.k:
        raise InvalidInputError(f"reduced embedding needs t > k/2, got {p} with t={p.t}")
    check_word(v, p.k, p.d)
    v = tuple(v)
    x, m, z = v[: p.s], v[p.s : p.t], v[p.t :]
    return x + m + m + z


def embedding_target(p: AOParams) -> AOParams:
    return AOParams(2 * p.t, p.d, p.t)


# -- export / import --------------------------------------------------------


def _params_doc(g: ExplicitGraph) -> dict | None:
    if g.params is not None:
        return g.params.as_dict()
    if g.matrix_order is not None:
        return {"matrix_order": g.matrix_order}
    return None


def export(g: ExplicitGraph, fmt: str = "json") -> bytes:
    if fmt == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "params": _params_doc(g),
            "vertices": [g.label(i) for i in range(g.n)],
            "edges": [list(e) for e in g.edges],
        }
        return (json.dumps(doc, indent=1) + "\n").encode()
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f'  n{i} [label="{g.label(i)}"];' for i in range(g.n)]
        lines += [f"  n{u} -- n{v};" for u, v in g.edges]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "edgelist":
        return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges).encode()
    raise InvalidInputError(f"unknown export format {fmt!r}; choose from {EXPORT_FORMATS}")


_MATRIX_LABEL = re.compile(r"^v(\d+)_(\d+)$")


def parse_graph_json(data: bytes | str) -> ExplicitGraph:
    try:
        doc = json.loads(data)
        params_doc = doc.get("params")
        labels = doc["vertices"]
        edges = tuple(tuple(e) for e in doc["edges"])
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InvalidInputError(f"malformed graph document: {exc}") from None
    if params_doc and "matrix_order" in params_doc:
        verts = []
        for lab in labels:
            m = _MATRIX_LABEL.match(lab)
            if not m:
                raise InvalidInputError(f"bad matrix vertex label {lab!r}")
            verts.append((int(m.group(1)), int(m.group(2))))
        return ExplicitGraph(tuple(verts), edges, matrix_order=int(params_doc["matrix_order"]))
    if params_doc:
        p = AOParams(**params_doc)
        verts = tuple(parse_word(lab, p.d, p.k) for lab in labels)
        return ExplicitGraph(verts, edges, params=p)
    return ExplicitGraph(tuple(labels), edges)
