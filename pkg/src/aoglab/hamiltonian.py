"""Hamiltonian cycles of AO graphs (two constructions) and of even grids.

Every constructor checks its own output with :func:`verify_cycle` before
returning it, so a returned certificate is always valid.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Union

from aoglab.errors import ConstructionFailed, InvalidInputError
from aoglab.guard import check_size
from aoglab.verdict import Verdict
from aoglab.words import AOParams, Word, _adjacent, parse_word, render_word, rotate_left

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class GridParams:
    """The grid {0..d-1}^k with unit-step adjacency."""

    d: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 2 or self.k < 2:
            raise InvalidInputError(f"grid needs d >= 2 and k >= 2, got d={self.d}, k={self.k}")

    @property
    def n_vertices(self) -> int:
        return self.d**self.k

    def as_dict(self) -> dict:
        return {"d": self.d, "dim": self.k}


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[Word, ...]
    params: Union[AOParams, GridParams]

    @property
    def kind(self) -> str:
        return "grid" if isinstance(self.params, GridParams) else "ao"

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ParityRefusal:
    params: GridParams
    reason: str


# -- insertion: add one letter of the alphabet at a time --------------------


def _rotation_chain(w: Word, s: int) -> list[Word]:
    chain = [w]
    nxt = rotate_left(w, s)
    while nxt != w:
        chain.append(nxt)
        nxt = rotate_left(nxt, s)
    return chain


def _insertion_representatives(k: int, s: int, b: int) -> list[list[Word]]:
    """Rotation chains that bring letter ``b`` into an alphabet of size ``b``.

    Each class of words containing ``b`` (classes = orbits of left rotation by
    s) is represented by its lex-smallest member having ``b`` among its last
    s letters.  Chains are ordered by number of ``b``s, then representative.
    """
    t = k - s
    chains = []
    for w in itertools.product(range(b + 1), repeat=k):
        if b not in w[t:]:
            continue
        chain = _rotation_chain(w, s)
        if w == min(m for m in chain if b in m[t:]):
            chains.append((w.count(b), w, chain))
    chains.sort(key=lambda item: item[:2])
    return [chain for _, _, chain in chains]


def insertion_hamiltonian(p: AOParams, cap: int | None = None) -> CycleCertificate:
    """Grow a Hamiltonian cycle one letter at a time by splicing in rotation chains.

    The cycle is kept as a successor map in which every step v -> w has
    suffix_t(v) == prefix_t(w).  A chain Sigma, rot^s(Sigma), ... is spliced in
    right after the word a^s + Sigma[:t]; its last member ends in Sigma[:t] too,
    so it steps forward into the anchor's old successor.
    """
    check_size(p.n_vertices, cap, what=str(p))
    k, s, t = p.k, p.s, p.t
    zero = (0,) * k
    succ: dict[Word, Word] = {zero: zero}
    for b in range(1, p.d):
        for chain in _insertion_representatives(k, s, b):
            anchor = (0,) * s + chain[0][:t]
            if anchor not in succ:
                raise ConstructionFailed(f"anchor {anchor} missing while inserting {chain[0]}")
            old = succ[anchor]
            succ[anchor] = chain[0]
            for u, v in zip(chain, chain[1:]):
                succ[u] = v
            succ[chain[-1]] = old
    order = [zero]
    v = succ[zero]
    while v != zero and len(order) <= p.n_vertices:
        order.append(v)
        v = succ[v]
    return _verified(CycleCertificate(tuple(order), p))


# -- Eulerian circuit of the directed tag graph ------------------------------


def eulerian_multigraph(p: AOParams) -> dict[Word, list[Word]]:
    """Out-edges of the directed graph on t-words: each k-word w is an edge
    from w[:t] to w[s:].  Edge lists are in lexicographic order."""
    out: dict[Word, list[Word]] = {}
    for u in itertools.product(range(p.d), repeat=p.t):
        out[u] = [u + y for y in itertools.product(range(p.d), repeat=p.s)]
    return out


def eulerian_hamiltonian(p: AOParams, cap: int | None = None) -> CycleCertificate:
    """Hierholzer's algorithm on the tag graph; the edge labels, in circuit order,
    are a Hamiltonian cycle of G(k, d, s).  Restricted to s <= floor(k/2)."""
    if p.s > p.k // 2:
        raise InvalidInputError(f"eulerian construction needs s <= floor(k/2), got {p}")
    if p.d < 2:
        raise InvalidInputError(f"eulerian construction needs d >= 2, got {p}")
    check_size(p.n_vertices, cap, what=str(p))
    out = eulerian_multigraph(p)
    used = dict.fromkeys(out, 0)
    start = (0,) * p.t
    stack: list[tuple[Word, Word | None]] = [(start, None)]
    circuit: list[Word] = []
    while stack:
        u, via = stack[-1]
        if used[u] < len(out[u]):
            edge = out[u][used[u]]
            used[u] += 1
            stack.append((edge[p.s :], edge))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    if len(circuit) != p.n_vertices:
        raise ConstructionFailed(
            f"tag graph of {p} is not connected: circuit covers {len(circuit)} edges"
        )
    return _verified(CycleCertificate(tuple(circuit), p))


def de_bruijn_string(c: CycleCertificate) -> str:
    """Circular sequence of first letters; only meaningful for s = 1 cycles."""
    if c.kind != "ao" or c.params.s != 1:
        raise InvalidInputError("de Bruijn export needs an AO cycle with s = 1")
    return render_word(tuple(v[0] for v in c.vertices), c.params.d)


def cycle_from_sequence(seq: str, k: int, d: int) -> CycleCertificate:
    """Read a circular sequence as its length-k windows, as a G(k, d, 1) cycle."""
    letters = parse_word(seq)
    n = len(letters)
    windows = tuple(tuple(letters[(i + j) % n] for j in range(k)) for i in range(n))
    return CycleCertificate(windows, AOParams(k, d, 1))


# -- grids -------------------------------------------------------------------


def _square_cycle(d: int) -> list[Word]:
    # row 0 left to right, snake rows 1..d-1 over columns 1..d-1, return up column 0
    cyc = [(0, c) for c in range(d)]
    for r in range(1, d):
        cols = range(d - 1, 0, -1) if r % 2 else range(1, d)
        cyc += [(r, c) for c in cols]
    cyc += [(r, 0) for r in range(d - 1, 0, -1)]
    return cyc


def grid_hamiltonian(g: GridParams, cap: int | None = None) -> CycleCertificate | ParityRefusal:
    if g.d % 2:
        return ParityRefusal(
            g,
            f"d={g.d} is odd, so the grid has {g.n_vertices} (odd) vertices; every step "
            "changes taxicab distance to the origin by +-1, and a closed walk needs as "
            "many +1 as -1 steps, i.e. an even length",
        )
    check_size(g.n_vertices, cap, what=f"grid {g.d}^{g.k}")
    cyc = _square_cycle(g.d)
    for _ in range(g.k - 2):
        # boustrophedon: alternate the direction of the new path coordinate
        nxt = []
        for i, v in enumerate(cyc):
            column = range(g.d) if i % 2 == 0 else range(g.d - 1, -1, -1)
            nxt += [v + (w,) for w in column]
        cyc = nxt
    return _verified(CycleCertificate(tuple(cyc), g))


def grid_adjacent(u: Word, v: Word) -> bool:
    return sum(abs(a - b) for a, b in zip(u, v)) == 1


# -- verification and serialization -----------------------------------------


def verify_cycle(c: CycleCertificate) -> Verdict:
    p = c.params
    n = p.n_vertices
    verts = c.vertices
    if isinstance(p, GridParams):
        adjacent = grid_adjacent
    else:
        adjacent = lambda u, v: _adjacent(u, v, p.s, p.t)  # noqa: E731
    seen: dict[Word, int] = {}
    for i, v in enumerate(verts):
        v = tuple(v)
        if len(v) != p.k or not all(0 <= x < p.d for x in v):
            return Verdict.reject(f"position {i}: {v} is not a vertex of the graph")
        if v in seen:
            return Verdict.reject(f"duplicate vertex {v} at positions {seen[v]} and {i}")
        seen[v] = i
    if len(verts) != n:
        return Verdict.reject(f"cycle has {len(verts)} vertices, graph has {n}")
    if n == 1:
        return Verdict.accept("single-vertex graph")
    for i in range(n):
        u, v = tuple(verts[i]), tuple(verts[(i + 1) % n])
        if not adjacent(u, v):
            return Verdict.reject(f"positions {i} and {(i + 1) % n}: {u} and {v} are not adjacent")
    return Verdict.accept(f"Hamiltonian cycle on {n} vertices")


def _verified(c: CycleCertificate) -> CycleCertificate:
    verdict = verify_cycle(c)
    if not verdict:
        raise ConstructionFailed(f"constructed cycle rejected: {verdict.message}")
    return c


def _render(v: Word, p) -> str:
    if isinstance(p, GridParams):
        return ",".join(str(x) for x in v)
    return render_word(v, p.d)


def cycle_to_json(c: CycleCertificate) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": c.kind,
        "params": c.params.as_dict(),
        "cycle": [_render(v, c.params) for v in c.vertices],
    }
    return json.dumps(doc, indent=1) + "\n"


def cycle_to_text(c: CycleCertificate) -> str:
    return "".join(_render(v, c.params) + "\n" for v in c.vertices)


def cycle_from_json(data: str | bytes) -> CycleCertificate:
    try:
        doc = json.loads(data)
        kind, params, labels = doc["kind"], doc["params"], doc["cycle"]
        if kind == "grid":
            p = GridParams(params["d"], params["dim"])
            verts = tuple(tuple(int(x) for x in lab.split(",")) for lab in labels)
        elif kind == "ao":
            p = AOParams(params["k"], params["d"], params["s"])
            verts = tuple(parse_word(lab) for lab in labels)
        else:
            raise InvalidInputError(f"unknown cycle kind {kind!r}")
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed cycle document: {exc}") from None
    return CycleCertificate(verts, p)
