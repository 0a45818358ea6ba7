"""Freely reduced words, abelianization and the degree-two (exterior) image.

Letters are ``(symbol, exponent)`` pairs with exponent ``+1`` or ``-1``.
Words are immutable and always kept freely reduced; cyclic reduction is
never applied implicitly, so relators keep their literal shape.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InvalidInput, NotInCommutatorSubgroup

Letter = tuple[str, int]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TERM = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?\Z")


def is_identifier(name) -> bool:
    return isinstance(name, str) and _IDENT.match(name) is not None


class Alphabet:
    """Ordered set of generator names; the order fixes vector coordinates."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        index = {}
        for i, s in enumerate(symbols):
            if s in index:
                raise InvalidInput(f"duplicate symbol {s!r} in alphabet")
            index[s] = i
        self.symbols = symbols
        self._index = index

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, s):
        return s in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"

    def index(self, s: str) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise InvalidInput(f"symbol {s!r} not in alphabet") from None

    def pairs(self) -> list[tuple[str, str]]:
        """Coordinate order of exterior images: (s_i, s_j) with i < j."""
        syms = self.symbols
        return [(syms[i], syms[j]) for i in range(len(syms)) for j in range(i + 1, len(syms))]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for s, e in letters:
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


class Word:
    """A freely reduced word over named generators."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = _free_reduce(letters)

    @classmethod
    def gen(cls, symbol: str, exponent: int = 1) -> "Word":
        return cls([(symbol, 1 if exponent > 0 else -1)] * abs(exponent))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __lt__(self, other):
        return self.letters < other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def inverse(self) -> "Word":
        return Word((s, -e) for s, e in reversed(self.letters))

    def symbols(self) -> set[str]:
        return {s for s, _ in self.letters}

    def substitute(self, mapping) -> "Word":
        """Replace each symbol found in ``mapping`` by the given word."""
        out: list[Letter] = []
        for s, e in self.letters:
            if s in mapping:
                w = mapping[s]
                out.extend(w.letters if e > 0 else w.inverse().letters)
            else:
                out.append((s, e))
        return Word(out)

    def cyclically_reduced(self) -> "Word":
        letters = self.letters
        i, j = 0, len(letters) - 1
        while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
            i += 1
            j -= 1
        return Word(letters[i:j + 1])

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word()


def reduce(raw: Iterable[tuple[str, int]], alphabet: Alphabet | None = None) -> Word:
    """Freely reduce a raw letter list; integer exponents are expanded."""
    letters: list[Letter] = []
    for s, e in raw:
        if alphabet is not None and s not in alphabet:
            raise InvalidInput(f"unknown symbol {s!r}")
        if not isinstance(e, int) or isinstance(e, bool):
            raise InvalidInput(f"exponent of {s!r} must be an integer")
        letters.extend([(s, 1 if e > 0 else -1)] * abs(e))
    return Word(letters)


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return Word(u.inverse().letters + v.inverse().letters + u.letters + v.letters)


def conjugate(w: Word, g: Word) -> Word:
    """w^g = g^-1 w g."""
    return g.inverse() * w * g


def abelianize(w: Word, alphabet: Alphabet) -> tuple[int, ...]:
    vec = [0] * len(alphabet)
    for s, e in w.letters:
        vec[alphabet.index(s)] += e
    return tuple(vec)


@dataclass(frozen=True)
class ExteriorImage:
    """Class of a commutator-subgroup word in gamma_2/gamma_3 = Lambda^2(Z^n).

    ``coeffs`` maps index pairs ``(i, j)``, ``i < j``, to nonzero integers.
    """

    alphabet: Alphabet
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, pair: tuple[str, str]) -> int:
        a, b = self.alphabet.index(pair[0]), self.alphabet.index(pair[1])
        if a == b:
            return 0
        if a < b:
            return self.coeffs.get((a, b), 0)
        return -self.coeffs.get((b, a), 0)

    def vector(self) -> list[int]:
        n = len(self.alphabet)
        return [self.coeffs.get((i, j), 0) for i in range(n) for j in range(i + 1, n)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExteriorImage") -> "ExteriorImage":
        if self.alphabet != other.alphabet:
            raise InvalidInput("exterior images over different alphabets")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return ExteriorImage(self.alphabet, {k: c for k, c in out.items() if c})

    def __neg__(self):
        return ExteriorImage(self.alphabet, {k: -c for k, c in self.coeffs.items()})


def pair_counts(w: Word, alphabet: Alphabet) -> list[list[int]]:
    """counts[i][j] = sum over positions p < q with symbol i at p, j at q of exp_p * exp_q."""
    n = len(alphabet)
    counts = [[0] * n for _ in range(n)]
    prefix = [0] * n
    for s, e in w.letters:
        j = alphabet.index(s)
        for i in range(n):
            if prefix[i]:
                counts[i][j] += prefix[i] * e
        prefix[j] += e
    return counts


def exterior_image(w: Word, alphabet: Alphabet) -> ExteriorImage:
    if any(abelianize(w, alphabet)):
        raise NotInCommutatorSubgroup(f"{w} has nonzero exponent sums")
    counts = pair_counts(w, alphabet)
    n = len(alphabet)
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            # half-difference; both halves agree on zero-sum words
            c = (counts[i][j] - counts[j][i]) // 2
            if c:
                coeffs[(i, j)] = c
    return ExteriorImage(alphabet, coeffs)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    terms = []
    letters = w.letters
    i = 0
    while i < len(letters):
        s, e = letters[i]
        k = i
        while k < len(letters) and letters[k] == (s, e):
            k += 1
        power = (k - i) * e
        terms.append(s if power == 1 else f"{s}^{power}")
        i = k
    return "*".join(terms)


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    if not isinstance(text, str):
        raise InvalidInput(f"word must be a string, got {type(text).__name__}")
    text = text.strip()
    if text == "1":
        return IDENTITY
    if not text:
        raise InvalidInput("empty word text (use '1' for the identity)")
    raw = []
    for term in text.split("*"):
        m = _TERM.match(term.strip())
        if m is None:
            raise InvalidInput(f"malformed word term {term!r} in {text!r}")
        raw.append((m.group(1), int(m.group(2)) if m.group(2) is not None else 1))
    return reduce(raw, alphabet)


def equivalent_relators(u: Word, v: Word) -> bool:
    """True if u is a cyclic conjugate of v or of v^-1.

    Such relators have the same normal closure; in particular [x, y] and
    [y, x] are equivalent, as are [x^-1, y] and [y, x].
    """
    a = u.cyclically_reduced().letters
    for target in (v, v.inverse()):
        b = target.cyclically_reduced().letters
        if len(a) != len(b):
            continue
        if not a:
            return True
        doubled = b + b
        if any(doubled[k:k + len(a)] == a for k in range(len(b))):
            return True
    return False


def alternating_word(x: str, y: str, length: int) -> Word:
    """The word x y x y ... with ``length`` letters."""
    return Word([((x, y)[k % 2], 1) for k in range(length)])
