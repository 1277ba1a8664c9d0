"""Words over a d-letter alphabet and the overlap relation between them.

Letters are stored as 0-based integers, so a word is just a tuple of ints.
Text rendering uses ``a, b, c, ...`` while ``d <= 26`` and comma-separated
integers otherwise.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterator, Sequence

from aoglab.errors import InvalidInputError
from aoglab.guard import check_size

Word = tuple[int, ...]

_LETTERS = string.ascii_lowercase


@dataclass(frozen=True)
class AOParams:
    """The triple (k, d, s) defining G(k, d, s); ``t = k - s`` is the tag length."""

    k: int
    d: int
    s: int

    def __post_init__(self) -> None:
        for name in ("k", "d", "s"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidInputError(f"{name} must be an int, got {value!r}")
        if self.k < 2:
            raise InvalidInputError(f"k must be >= 2, got {self.k}")
        if self.d < 1:
            raise InvalidInputError(f"d must be >= 1, got {self.d}")
        if not 1 <= self.s <= self.k - 1:
            raise InvalidInputError(f"s must satisfy 1 <= s <= k-1, got s={self.s}, k={self.k}")

    @property
    def t(self) -> int:
        return self.k - self.s

    @property
    def n_vertices(self) -> int:
        return self.d**self.k

    def as_dict(self) -> dict:
        return {"k": self.k, "d": self.d, "s": self.s}

    def __str__(self) -> str:
        return f"G({self.k},{self.d},{self.s})"


def check_word(w: Sequence[int], length: int, d: int) -> None:
    if len(w) != length:
        raise InvalidInputError(f"word {w!r} has length {len(w)}, expected {length}")
    for letter in w:
        if not isinstance(letter, int) or not 0 <= letter < d:
            raise InvalidInputError(f"word {w!r} has letter {letter!r} outside [0, {d})")


def prefix_tag(w: Word, p: AOParams) -> Word:
    return tuple(w[: p.t])


def suffix_tag(w: Word, p: AOParams) -> Word:
    return tuple(w[p.s :])


def overlap_adjacent(v: Word, w: Word, p: AOParams) -> bool:
    """True iff v != w and one word's last t letters are the other's first t letters."""
    check_word(v, p.k, p.d)
    check_word(w, p.k, p.d)
    return _adjacent(tuple(v), tuple(w), p.s, p.t)


def _adjacent(v: Word, w: Word, s: int, t: int) -> bool:
    # unchecked fast path used by verifiers in tight loops
    return v != w and (v[s:] == w[:t] or v[:t] == w[s:])


def rotate_left(w: Word, r: int) -> Word:
    if not w:
        return tuple(w)
    r %= len(w)
    return tuple(w[r:]) + tuple(w[:r])


def enumerate_words(length: int, d: int, cap: int | None = None) -> Iterator[Word]:
    """Yield all ``d**length`` words in lexicographic order."""
    if length < 0 or d < 1:
        raise InvalidInputError(f"need length >= 0 and d >= 1, got length={length}, d={d}")
    check_size(d**length, cap, what=f"word space {d}^{length}")
    return itertools.product(range(d), repeat=length)


def word_rank(w: Word, d: int) -> int:
    """Position of ``w`` in the lexicographic order (its base-d value)."""
    rank = 0
    for letter in w:
        rank = rank * d + letter
    return rank


def word_from_rank(rank: int, length: int, d: int) -> Word:
    letters = [0] * length
    for i in range(length - 1, -1, -1):
        rank, letters[i] = divmod(rank, d)
    return tuple(letters)


def render_word(w: Word, d: int) -> str:
    if d <= len(_LETTERS):
        return "".join(_LETTERS[x] for x in w)
    return ",".join(str(x) for x in w)


def parse_word(text: str, d: int | None = None, length: int | None = None) -> Word:
    """Parse ``aab``, ``001`` or ``0,0,1`` into a word.

    Bare digit strings are read one letter per digit, which is how binary
    de Bruijn windows are usually written, unless ``d > 26`` says the text is
    in the comma form (a one-letter word renders as ``12``).
    """
    text = text.strip()
    if "," in text or (d is not None and d > len(_LETTERS) and text):
        try:
            w = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise InvalidInputError(f"cannot parse word {text!r}") from None
    elif text.isdigit():
        w = tuple(int(ch) for ch in text)
    elif text == "" or all(ch in _LETTERS for ch in text):
        w = tuple(_LETTERS.index(ch) for ch in text)
    else:
        raise InvalidInputError(f"cannot parse word {text!r}")
    if d is not None:
        check_word(w, len(w) if length is None else length, d)
    elif length is not None and len(w) != length:
        raise InvalidInputError(f"word {text!r} has length {len(w)}, expected {length}")
    return w
