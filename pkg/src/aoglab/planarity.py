"""Planarity of AO graphs with t <= k/2: stored embeddings for the two planar
cases and K3,3 / K4,4 subgraph witnesses for everything else."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from aoglab.errors import InvalidInputError
from aoglab.graph import ExplicitGraph, materialize
from aoglab.verdict import Verdict
from aoglab.words import AOParams, Word, _adjacent, parse_word, render_word

SCHEMA_VERSION = 1

# Clockwise neighbour orders.  Produced once with a planarity tester and frozen;
# verify_embedding re-derives the face count, so nothing here is trusted.
_FIXTURES = {
    (2, 2, 1): {
        "aa": ["ab", "ba"],
        "ab": ["aa", "ba", "bb"],
        "ba": ["ab", "aa", "bb"],
        "bb": ["ba", "ab"],
    },
    (2, 3, 1): {
        "aa": ["ab", "ca", "ac", "ba"],
        "ab": ["aa", "ba", "bb", "bc", "ca"],
        "ac": ["ba", "aa", "ca", "cc", "cb"],
        "ba": ["ab", "aa", "ac", "cb", "bb"],
        "bb": ["bc", "ab", "ba", "cb"],
        "bc": ["ca", "ab", "bb", "cb", "cc"],
        "ca": ["ac", "aa", "ab", "bc", "cc"],
        "cb": ["bb", "ba", "ac", "cc", "bc"],
        "cc": ["cb", "ac", "ca", "bc"],
    },
}


class Status(str, Enum):
    PLANAR = "planar"
    NONPLANAR = "nonplanar"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BipartiteWitness:
    left: tuple[Word, ...]
    right: tuple[Word, ...]
    params: AOParams


@dataclass(frozen=True)
class PlanarityVerdict:
    status: Status
    params: AOParams
    witness: BipartiteWitness | None = None
    embedding: dict[Word, list[Word]] | None = None
    reason: str = ""


def fixture_embedding(p: AOParams) -> dict[Word, list[Word]]:
    try:
        raw = _FIXTURES[(p.k, p.d, p.s)]
    except KeyError:
        raise InvalidInputError(f"no stored planar embedding for {p}") from None
    return {parse_word(v): [parse_word(u) for u in rot] for v, rot in raw.items()}


def k33_witness(p: AOParams) -> BipartiteWitness:
    """alpha w X on the left, X w alpha on the right, for the four lex-smallest tags."""
    if 2 * p.t > p.k:
        raise InvalidInputError(f"K3,3 witness needs t <= k/2, got {p}")
    if p.d**p.t < 4:
        raise InvalidInputError(f"K3,3 witness needs at least 4 tags, {p} has {p.d ** p.t}")
    tags = [_tag(r, p.t, p.d) for r in range(4)]
    alpha, others = tags[0], tags[1:]
    w = (0,) * (p.k - 2 * p.t)
    left = tuple(alpha + w + x for x in others)
    right = tuple(x + w + alpha for x in others)
    return BipartiteWitness(left, right, p)


def k44_witness(p: AOParams) -> BipartiteWitness:
    """For t = 1 and k >= 3: a m a, b m b against a m b, b m a, over two middles m.

    With k = 3, d = 2 these are {000, 010, 101, 111} and {001, 011, 100, 110}.
    """
    if p.t != 1 or p.k < 3 or p.d < 2:
        raise InvalidInputError(f"K4,4 witness needs t = 1, k >= 3, d >= 2, got {p}")
    middles = [_tag(r, p.k - 2, p.d) for r in range(2)]
    a, b = (0,), (1,)
    left = tuple(x + m + x for x in (a, b) for m in middles)
    right = tuple(x + m + y for x, y in ((a, b), (b, a)) for m in middles)
    return BipartiteWitness(left, right, p)


def _tag(rank: int, length: int, d: int) -> Word:
    letters = [0] * length
    for i in range(length - 1, -1, -1):
        rank, letters[i] = divmod(rank, d)
    return tuple(letters)


def verify_witness(w: BipartiteWitness) -> Verdict:
    p = w.params
    if len(w.left) not in (3, 4) or len(w.right) not in (3, 4):
        return Verdict.reject(f"class sizes {len(w.left)}, {len(w.right)} are not in {{3, 4}}")
    everything = list(w.left) + list(w.right)
    for v in everything:
        if len(v) != p.k or not all(isinstance(x, int) and 0 <= x < p.d for x in v):
            return Verdict.reject(f"{v} is not a vertex of {p}")
    if len(set(everything)) != len(everything):
        return Verdict.reject("witness vertices are not distinct")
    for u in w.left:
        for v in w.right:
            if not _adjacent(tuple(u), tuple(v), p.s, p.t):
                return Verdict.reject(
                    f"{render_word(u, p.d)} and {render_word(v, p.d)} are not adjacent"
                )
    return Verdict.accept(f"K{len(w.left)},{len(w.right)} subgraph")


def trace_faces(rotation: dict) -> list[list[tuple]]:
    """Faces of the embedding given by a rotation system, as lists of darts.

    The dart after (u, v) is (v, w) where w follows u in the rotation at v.
    """
    position = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotation.items()}
    unused = {(u, v) for u, rot in rotation.items() for v in rot}
    faces = []
    for start in sorted(unused):
        if start not in unused:
            continue
        face = []
        dart = start
        while dart in unused:
            unused.remove(dart)
            face.append(dart)
            u, v = dart
            rot = rotation[v]
            dart = (v, rot[(position[v][u] + 1) % len(rot)])
        faces.append(face)
    return faces


def verify_embedding(g: ExplicitGraph, rotation: dict) -> Verdict:
    """Check that ``rotation`` lists each vertex's neighbours once and that every
    connected component satisfies V - E + F = 2."""
    labels = set(g.vertices)
    if set(rotation) != labels:
        return Verdict.reject("rotation system and graph have different vertex sets")
    for i, v in enumerate(g.vertices):
        expected = {g.vertices[j] for j in g.adjacency[i]}
        rot = rotation[v]
        if len(rot) != len(set(rot)) or set(rot) != expected:
            return Verdict.reject(f"rotation at {g.label(i)} is not a permutation of its neighbours")
    faces = trace_faces(rotation)
    comp = _components(g)
    stats: dict[int, list[int]] = {}
    for i, v in enumerate(g.vertices):
        stats.setdefault(comp[v], [0, 0, 0])[0] += 1
    for u, v in g.edges:
        stats[comp[g.vertices[u]]][1] += 1
    for face in faces:
        stats[comp[face[0][0]]][2] += 1
    for c, (nv, ne, nf) in sorted(stats.items()):
        nf = max(nf, 1)  # an isolated vertex bounds the single outer face
        if nv - ne + nf != 2:
            return Verdict.reject(f"component {c}: V - E + F = {nv} - {ne} + {nf} != 2")
    return Verdict.accept(f"planar embedding with {len(faces)} faces")


def _components(g: ExplicitGraph) -> dict:
    comp: dict = {}
    for root in range(g.n):
        if g.vertices[root] in comp:
            continue
        stack = [root]
        comp[g.vertices[root]] = root
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if g.vertices[v] not in comp:
                    comp[g.vertices[v]] = root
                    stack.append(v)
    return comp


def classify_planarity(p: AOParams) -> PlanarityVerdict:
    if p.d == 1:
        return PlanarityVerdict(
            Status.PLANAR, p, embedding={(0,) * p.k: []}, reason="single vertex"
        )
    if 2 * p.t > p.k:
        return PlanarityVerdict(Status.UNKNOWN, p, reason="only t <= k/2 is classified")
    if (p.k, p.d, p.s) in _FIXTURES:
        emb = fixture_embedding(p)
        verdict = verify_embedding(materialize(p), emb)
        if not verdict:
            raise AssertionError(f"stored embedding for {p} rejected: {verdict.message}")
        return PlanarityVerdict(Status.PLANAR, p, embedding=emb, reason=verdict.message)
    witness = k33_witness(p) if p.d**p.t >= 4 else k44_witness(p)
    verdict = verify_witness(witness)
    if not verdict:
        raise AssertionError(f"witness for {p} rejected: {verdict.message}")
    return PlanarityVerdict(Status.NONPLANAR, p, witness=witness, reason=verdict.message)


def verdict_to_json(v: PlanarityVerdict) -> str:
    d = v.params.d
    doc: dict = {"schema": SCHEMA_VERSION, "params": v.params.as_dict(), "status": v.status.value}
    if v.witness is not None:
        doc["witness"] = {
            "left": [render_word(w, d) for w in v.witness.left],
            "right": [render_word(w, d) for w in v.witness.right],
        }
    if v.embedding is not None:
        doc["embedding"] = {
            render_word(u, d): [render_word(w, d) for w in rot]
            for u, rot in sorted(v.embedding.items())
        }
    if v.reason:
        doc["reason"] = v.reason
    return json.dumps(doc, indent=1) + "\n"


def witness_from_json(data: str | bytes) -> BipartiteWitness:
    """Read the witness out of a verdict document (or a bare witness with params)."""
    try:
        doc = json.loads(data)
        p = AOParams(**{key: doc["params"][key] for key in ("k", "d", "s")})
        if "status" in doc and "witness" not in doc:
            raise InvalidInputError(f"verdict is {doc['status']!r} and carries no witness")
        wit = doc.get("witness", doc)
        left = tuple(parse_word(x) for x in wit["left"])
        right = tuple(parse_word(x) for x in wit["right"])
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed witness document: {exc}") from None
    return BipartiteWitness(left, right, p)
