"""
The linear basis of the enveloping algebra as words

    w_0 F_{i_1} w_1 F_{i_2} w_2 ... w_{s-1} F_{i_s} w_s

with every w_k an ordered (nondecreasing) monomial in the small letters and

    a) w_k non-empty for 0 < k < s,
    b) i_k <= [w_k] for 0 < k < s, and i_s <= [w_s] unless w_s is empty,
    c) an interior one-letter block w_k = f_p (0 < k < s) forces p <= i_{k+1},

where [w] is the first (smallest) index of the monomial w.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from .free_algebra import Alphabet, NcPolynomial, Word
from .rewriting import RelationSet, irreducible_words, normal_form

__all__ = [
    "BasisCheck", "InconsistentBasisError",
    "parse_blocks", "is_basis_word", "enumerate_pattern", "enumerate_irreducible",
    "normal_coordinates", "tensor_decomposition_census", "format_word_list",
]


class InconsistentBasisError(RuntimeError):
    """A normal form contains a word outside the basis: the relation set
    is not the Gröbner–Shirshov basis it was claimed to be."""


@dataclass
class BasisCheck:
    word: Word
    head: Tuple[int, ...] = ()                       # w_0, as small indices
    blocks: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)  # (i_k, w_k)
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def parse_blocks(w: Word, alphabet: Alphabet):
    """Split a word into its leading small run and ``(big index, small run)``
    blocks; runs are returned as tuples of 1-based small indices."""
    alphabet.check_ordered(w)
    head: List[int] = []
    blocks: List[Tuple[int, List[int]]] = []
    for c in w:
        letter = alphabet.letter(c)
        if alphabet.is_big(c):
            blocks.append((letter.index, []))
        elif blocks:
            blocks[-1][1].append(letter.index)
        else:
            head.append(letter.index)
    return tuple(head), [(i, tuple(run)) for i, run in blocks]


def is_basis_word(w: Word, alphabet: Alphabet) -> BasisCheck:
    head, blocks = parse_blocks(w, alphabet)
    check = BasisCheck(tuple(w), head, blocks)
    v = check.violations
    s = len(blocks)
    runs = [("w_0", head)] + [(f"w_{k}", run) for k, (_, run) in enumerate(blocks, 1)]
    for name, run in runs:
        if any(a > b for a, b in zip(run, run[1:])):
            v.append(f"a) {name} = {_fmt(run)} is not an ordered monomial")
    for k, (i, run) in enumerate(blocks, 1):
        if k < s and not run:
            v.append(f"a) interior block w_{k} is empty")
        if run and i > run[0]:
            v.append(f"b) i_{k} = {i} > [w_{k}] = {run[0]}")
        if k < s and len(run) == 1 and run[0] > blocks[k][0]:
            v.append(f"c) interior block w_{k} = f{run[0]} needs {run[0]} <= i_{k + 1} = {blocks[k][0]}")
    return check


def _fmt(run):
    return " ".join(f"f{p}" for p in run) or "1"


def _monomials(length: int, lo: int, d: int):
    return itertools.combinations_with_replacement(range(lo, d + 1), length)


def enumerate_pattern(d: int, n: int) -> List[Word]:
    """All basis words of length ``n``, generated block by block, sorted."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    A = Alphabet(d)
    small = [None] + [A.small(i) for i in range(1, d + 1)]
    big = [None] + [A.big(i) for i in range(1, d + 1)]

    def tails(remaining: int, min_big: int) -> Iterator[Word]:
        # F_i w ... covering exactly `remaining` letters
        if remaining == 0:
            yield ()
            return
        for i in range(min_big, d + 1):
            if remaining == 1:
                yield (big[i],)
                continue
            for m in range(1, remaining):
                last = (m == remaining - 1)
                for mono in _monomials(m, i, d):
                    block = (big[i],) + tuple(small[p] for p in mono)
                    if last:
                        yield block
                    else:
                        nxt = mono[0] if m == 1 else 1
                        for t in tails(remaining - 1 - m, nxt):
                            yield block + t

    out = []
    for a in range(n + 1):
        for mono in _monomials(a, 1, d):
            head = tuple(small[p] for p in mono)
            for t in tails(n - a, 1):
                out.append(head + t)
    out.sort()
    return out


def enumerate_irreducible(S: RelationSet, n: int) -> List[Word]:
    """Words of length ``n`` avoiding every leading word of ``S``, sorted."""
    return irreducible_words(S, n)


def normal_coordinates(p: NcPolynomial, S: RelationSet) -> NcPolynomial:
    """Coordinates of ``p`` in the word basis: its normal form modulo ``S``,
    with every surviving word checked against the basis pattern."""
    nf = normal_form(p, S)
    for w in nf.words():
        check = is_basis_word(w, S.alphabet)
        if not check:
            raise InconsistentBasisError(
                f"normal form contains {S.alphabet.format_word(w)}, "
                f"which is not a basis word: {'; '.join(check.violations)}")
    return nf


def _compositions(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _profile_count(profile: Tuple[int, ...], d: int) -> int:
    """Number of block sequences of D(X) with the given block sizes.

    A block is an ordered monomial x_i m (i <= [m]); non-final blocks have
    size >= 2, and a size-2 block x_i x_j must be followed by a block whose
    first index k satisfies k >= j.
    """
    if any(t < 2 for t in profile[:-1]):
        return 0
    # ways[b] = number of ways to fill remaining blocks given first index >= b
    state = {1: 1}
    s = len(profile)
    for pos, t in enumerate(profile):
        last = pos == s - 1
        nxt: Dict[int, int] = {}
        for lo, ways in state.items():
            for i in range(lo, d + 1):
                if t == 2 and not last:
                    for j in range(i, d + 1):
                        nxt[j] = nxt.get(j, 0) + ways
                else:
                    # multisets of size t-1 drawn from {i..d}
                    nxt[1] = nxt.get(1, 0) + ways * comb(t - 1 + d - i, t - 1)
        state = nxt
    return sum(state.values())


def tensor_decomposition_census(d: int, n: int) -> Counter:
    """Basis counts in degree ``n`` stratified by ``(|w_0|, block sizes)``.

    Uses the splitting of a basis word into a commutative head w_0 and a
    word over the blocks f_{i_k} w_k; the total equals the number of basis
    words of length ``n``.
    """
    census: Counter = Counter()
    for a in range(n + 1):
        heads = comb(a + d - 1, d - 1)
        for profile in _compositions(n - a):
            c = _profile_count(profile, d) if profile else 1
            if c:
                census[(a, profile)] = heads * c
    return census


def format_word_list(words, alphabet: Alphabet, aliases: bool = False) -> str:
    """One word per line, letters as ``f3``/``F2`` tokens."""
    return "".join(alphabet.format_word(w, aliases) + "\n" for w in words)
