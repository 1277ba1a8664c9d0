"""Dominating sets of AO graphs: the tag-times-anchor construction and an exact oracle."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

from aoglab.errors import InvalidInputError
from aoglab.graph import ExplicitGraph, neighbors
from aoglab.guard import DOMINATION_ORACLE_MAX, check_size
from aoglab.verdict import Verdict
from aoglab.words import AOParams, Word, check_word, enumerate_words, parse_word, render_word

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DominatingSet:
    members: frozenset[Word]
    params: AOParams

    def __len__(self) -> int:
        return len(self.members)


def dominating_set_construct(p: AOParams, x: Word | None = None) -> DominatingSet:
    """All words ``tag + x`` for the d**t tags; ``x`` defaults to 0**s."""
    if 2 * p.t > p.k:
        raise InvalidInputError(f"construction needs t <= k/2, got {p} with t={p.t}")
    if x is None:
        x = (0,) * p.s
    check_word(x, p.s, p.d)
    members = frozenset(tag + tuple(x) for tag in itertools.product(range(p.d), repeat=p.t))
    return DominatingSet(members, p)


def verify_dominating(ds: DominatingSet, cap: int | None = None) -> Verdict:
    p = ds.params
    for w in sorted(ds.members):
        if len(w) != p.k or not all(0 <= x < p.d for x in w):
            return Verdict.reject(f"member {w} is not a vertex of {p}")
    for v in enumerate_words(p.k, p.d, cap):
        if v in ds.members:
            continue
        if not any(w in ds.members for w in neighbors(v, p)):
            return Verdict.reject(f"vertex {render_word(v, p.d)} is not dominated")
    return Verdict.accept(f"dominating set of size {len(ds)}")


def colex_subsets(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """r-subsets of range(n) in colexicographic order."""
    if r == 0:
        yield ()
        return
    for top in range(r - 1, n):
        for rest in colex_subsets(top, r - 1):
            yield rest + (top,)


def minimum_dominating_set(g: ExplicitGraph, cap: int = DOMINATION_ORACLE_MAX) -> tuple[int, ...]:
    """First dominating set found scanning sizes 0, 1, 2, ... in colex order."""
    check_size(g.n, cap, what="domination oracle input")
    full = (1 << g.n) - 1
    closed = [m | (1 << i) for i, m in enumerate(g.masks)]
    for r in range(g.n + 1):
        for subset in colex_subsets(g.n, r):
            covered = 0
            for i in subset:
                covered |= closed[i]
            if covered == full:
                return subset
    raise AssertionError("unreachable: the whole vertex set dominates")


def domination_number_exact_oracle(g: ExplicitGraph, cap: int = DOMINATION_ORACLE_MAX) -> int:
    return len(minimum_dominating_set(g, cap))


def dominating_to_json(ds: DominatingSet) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "params": ds.params.as_dict(),
        "members": [render_word(w, ds.params.d) for w in sorted(ds.members)],
    }
    return json.dumps(doc, indent=1) + "\n"


def dominating_from_json(data: str | bytes) -> DominatingSet:
    try:
        doc = json.loads(data)
        p = AOParams(**{key: doc["params"][key] for key in ("k", "d", "s")})
        members = frozenset(parse_word(lab) for lab in doc["members"])
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed dominating-set document: {exc}") from None
    return DominatingSet(members, p)
