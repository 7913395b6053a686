"""
Free associative algebra over the rationals on the letters
f_1..f_d (small), F_1..F_d (big) and, at the input stage only, f'_1..f'_d.

Words are tuples of integer letter codes.  The codes are assigned so that
plain tuple comparison of ``(len(w), w)`` is the deg-lex order on words:

    f_1 < f_2 < ... < f_d < F_1 < F_2 < ... < F_d

Primed letters get codes above every ordered letter but are *not* ordered;
any order-dependent operation on a word containing one raises
``UnorderedGeneratorError``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

__all__ = [
    "SMALL", "BIG", "PRIMED",
    "Letter", "Alphabet", "Word", "NcPolynomial",
    "UnorderedGeneratorError", "AlphabetMismatchError",
    "compare_letters", "compare_words", "word_key",
    "leading_word", "make_monic", "substitute",
]

SMALL = "small"
BIG = "big"
PRIMED = "primed"

Word = Tuple[int, ...]
Scalar = Union[int, Fraction]


class UnorderedGeneratorError(ValueError):
    """Raised when a primed letter reaches an order-dependent operation."""

    def __init__(self, letter=None):
        msg = "unordered generator"
        if letter is not None:
            msg += f": {letter}"
        super().__init__(msg)


class AlphabetMismatchError(ValueError):
    pass


class Letter(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        if self.kind == SMALL:
            return f"f{self.index}"
        if self.kind == BIG:
            return f"F{self.index}"
        return f"f{self.index}'"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def compare_letters(a: Letter, b: Letter, big_descending: bool = False) -> int:
    """Three-way comparison of two generators: -1, 0 or 1.

    Small letters precede big ones; small letters ascend with the index.
    Big letters ascend with the index unless ``big_descending`` is set.
    """
    for x in (a, b):
        if x.kind == PRIMED:
            raise UnorderedGeneratorError(x)
    if a.kind != b.kind:
        return -1 if a.kind == SMALL else 1
    if a.kind == BIG and big_descending:
        return _sign(b.index - a.index)
    return _sign(a.index - b.index)


def word_key(w: Word) -> Tuple[int, Word]:
    """Sort key realising deg-lex on letter codes."""
    return (len(w), w)


@dataclass(frozen=True)
class Alphabet:
    """The ordered alphabet for a ``dim``-dimensional algebra.

    ``big_descending`` flips the order among the big letters
    (F_d < ... < F_1).  It exists to study the alternative reading of the
    order; every construction in the package uses the default.
    """

    dim: int
    big_descending: bool = False

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")

    # -- letter codes --------------------------------------------------------
    def small(self, i: int) -> int:
        self._check_index(i)
        return i - 1

    def big(self, i: int) -> int:
        self._check_index(i)
        if self.big_descending:
            return 2 * self.dim - i
        return self.dim + i - 1

    def primed(self, i: int) -> int:
        self._check_index(i)
        return 2 * self.dim + i - 1

    def code(self, letter: Letter) -> int:
        return {SMALL: self.small, BIG: self.big, PRIMED: self.primed}[letter.kind](letter.index)

    def letter(self, code: int) -> Letter:
        d = self.dim
        if 0 <= code < d:
            return Letter(SMALL, code + 1)
        if d <= code < 2 * d:
            k = code - d
            return Letter(BIG, d - k if self.big_descending else k + 1)
        if 2 * d <= code < 3 * d:
            return Letter(PRIMED, code - 2 * d + 1)
        raise ValueError(f"letter code {code} out of range for dimension {d}")

    def _check_index(self, i):
        if not 1 <= i <= self.dim:
            raise ValueError(f"generator index {i} outside 1..{self.dim}")

    @property
    def ordered_codes(self) -> range:
        """Codes of all small and big letters, in increasing order."""
        return range(2 * self.dim)

    def is_small(self, code: int) -> bool:
        return 0 <= code < self.dim

    def is_big(self, code: int) -> bool:
        return self.dim <= code < 2 * self.dim

    def is_primed(self, code: int) -> bool:
        return code >= 2 * self.dim

    def check_ordered(self, w: Word) -> None:
        for c in w:
            if c >= 2 * self.dim:
                raise UnorderedGeneratorError(self.letter(c))

    # -- text form -----------------------------------------------------------
    _ALIASES = {1: {"f": (SMALL, 1), "F": (BIG, 1)},
                2: {"f": (SMALL, 1), "g": (SMALL, 2), "F": (BIG, 1), "G": (BIG, 2)}}

    def token(self, code: int, aliases: bool = False) -> str:
        letter = self.letter(code)
        if aliases and self.dim in self._ALIASES:
            for name, (kind, idx) in self._ALIASES[self.dim].items():
                if (kind, idx) == (letter.kind, letter.index):
                    return name
            if letter.kind == PRIMED:
                return self.token(self.small(letter.index), aliases=True) + "'"
        return str(letter)

    def format_word(self, w: Word, aliases: bool = False, sep: str = " ") -> str:
        if not w:
            return "1"
        return sep.join(self.token(c, aliases) for c in w)

    def parse_token(self, tok: str) -> int:
        m = re.fullmatch(r"([fF])(\d+)('?)", tok)
        if m:
            kind, idx, prime = m.groups()
            idx = int(idx)
            if prime:
                if kind != "f":
                    raise ValueError(f"only small letters can be primed: {tok!r}")
                return self.primed(idx)
            return self.small(idx) if kind == "f" else self.big(idx)
        m = re.fullmatch(r"([fgFG])('?)", tok)
        if m and self.dim in self._ALIASES and m.group(1) in self._ALIASES[self.dim]:
            kind, idx = self._ALIASES[self.dim][m.group(1)]
            if m.group(2):
                if kind != SMALL:
                    raise ValueError(f"only small letters can be primed: {tok!r}")
                return self.primed(idx)
            return self.small(idx) if kind == SMALL else self.big(idx)
        raise ValueError(f"unknown generator token {tok!r} for dimension {self.dim}")

    def word(self, text: str) -> Word:
        """Parse ``"F3 f2 f1"`` (or ``"G g F"`` when dim <= 2) into a word."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        return tuple(self.parse_token(t) for t in text.split())

    def poly(self, text: str) -> "NcPolynomial":
        """Parse a signed sum of terms such as ``"F2 f1 - 1/2 f1 F2 + 3"``."""
        return NcPolynomial.parse(self, text)


def compare_words(u: Word, v: Word) -> int:
    """Deg-lex three-way comparison of two words over the same alphabet."""
    return _sign((u > v) - (u < v)) if len(u) == len(v) else _sign(len(u) - len(v))


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:[fgFG]\d*'?\s*)*)")


class NcPolynomial:
    """A finite rational combination of words.

    Instances are immutable.  The zero polynomial has no terms; stored
    coefficients are never zero.
    """

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Scalar] = ()):
        self.alphabet = alphabet
        clean: Dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            c = Fraction(c)
            if c:
                w = tuple(w)
                c = clean.get(w, 0) + c
                if c:
                    clean[w] = c
                else:
                    del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alphabet, terms):
        # terms already clean: Fraction coefficients, no zeros
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, alphabet: Alphabet, w: Iterable[int], coeff: Scalar = 1) -> "NcPolynomial":
        return cls(alphabet, {tuple(w): coeff})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPolynomial":
        return cls._raw(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPolynomial":
        return cls._raw(alphabet, {(): Fraction(1)})

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "NcPolynomial":
        text = text.strip()
        if not text:
            raise ValueError("empty expression")
        terms: Dict[Word, Fraction] = {}
        pos = 0
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse expression near {text[pos:]!r}")
            sign, coeff, letters = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing operator near {text[pos:]!r}")
            if coeff is None and not letters.strip():
                raise ValueError(f"empty term near {text[pos:]!r}")
            c = Fraction(coeff) if coeff else Fraction(1)
            if sign == "-":
                c = -c
            w = alphabet.word(letters)
            terms[w] = terms.get(w, 0) + c
            pos = m.end()
            first = False
        return cls(alphabet, terms)

    # -- basic protocol ------------------------------------------------------
    @property
    def terms(self) -> Dict[Word, Fraction]:
        """Copy of the word -> coefficient mapping."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        """Terms in decreasing deg-lex order (leading term first)."""
        for w in self._terms:
            self.alphabet.check_ordered(w)
        return iter(sorted(self._terms.items(), key=lambda t: word_key(t[0]), reverse=True))

    def words(self):
        return self._terms.keys()

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, NcPolynomial):
            return self.alphabet == other.alphabet and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def has_primed(self) -> bool:
        top = 2 * self.alphabet.dim
        return any(c >= top for w in self._terms for c in w)

    # -- ring operations -----------------------------------------------------
    def _check(self, other: "NcPolynomial"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                f"alphabets differ: {self.alphabet} vs {other.alphabet}")

    def _coerce(self, other):
        if isinstance(other, NcPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NcPolynomial(self.alphabet, {(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                del out[w]
        return NcPolynomial._raw(self.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPolynomial._raw(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, alpha: Scalar) -> "NcPolynomial":
        alpha = Fraction(alpha)
        if not alpha:
            return NcPolynomial.zero(self.alphabet)
        return NcPolynomial._raw(self.alphabet, {w: alpha * c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Word, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                s = out.get(w, 0) + a * b
                if s:
                    out[w] = s
                else:
                    del out[w]
        return NcPolynomial._raw(self.alphabet, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def lrmul(self, left: Word, right: Word, coeff: Scalar = 1) -> "NcPolynomial":
        """``coeff * left * self * right`` for words ``left`` and ``right``."""
        coeff = Fraction(coeff)
        if not coeff:
            return NcPolynomial.zero(self.alphabet)
        left, right = tuple(left), tuple(right)
        return NcPolynomial._raw(
            self.alphabet, {left + w + right: coeff * c for w, c in self._terms.items()})

    # -- order-dependent -----------------------------------------------------
    def leading_word(self) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        for w in self._terms:
            self.alphabet.check_ordered(w)
        return max(self._terms, key=word_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_word()]

    def make_monic(self) -> "NcPolynomial":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def is_monic(self) -> bool:
        return bool(self._terms) and self.leading_coefficient() == 1

    def substitute(self, x: int, r: "NcPolynomial") -> "NcPolynomial":
        """Replace every occurrence of the letter code ``x`` by ``r``."""
        self._check(r)
        out = NcPolynomial.zero(self.alphabet)
        for w, c in self._terms.items():
            if x not in w:
                out = out + NcPolynomial._raw(self.alphabet, {w: c})
                continue
            term = NcPolynomial._raw(self.alphabet, {(): c})
            for letter in w:
                term = term * (r if letter == x else NcPolynomial._raw(self.alphabet, {(letter,): Fraction(1)}))
            out = out + term
        return out

    # -- text ----------------------------------------------------------------
    def to_string(self, aliases: bool = False) -> str:
        if not self._terms:
            return "0"
        # primed letters sort by code here; display order only
        ordered = sorted(self._terms.items(), key=lambda t: word_key(t[0]), reverse=True)
        parts = []
        for k, (w, c) in enumerate(ordered):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = self.alphabet.format_word(w, aliases)
            if w and mag == 1:
                text = body
            elif w:
                text = f"{mag} {body}"
            else:
                text = str(mag)
            if k == 0:
                parts.append(("-" if sign == "-" else "") + text)
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"NcPolynomial({self.to_string()!r}, dim={self.alphabet.dim})"


def leading_word(p: NcPolynomial) -> Word:
    return p.leading_word()


def make_monic(p: NcPolynomial) -> NcPolynomial:
    return p.make_monic()


def substitute(p: NcPolynomial, x: int, r: NcPolynomial) -> NcPolynomial:
    return p.substitute(x, r)
