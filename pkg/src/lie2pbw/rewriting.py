"""
Reduction modulo monic relations in the free associative algebra,
compositions (overlaps and inclusions of leading words), Gröbner–Shirshov
basis verification and bounded Shirshov completion.

Reduction strategy: the largest remaining word is processed first; if it
contains leading words of the relation set, the relation with the smallest
id is applied at its leftmost occurrence.  The result does not depend on
this choice when the relation set is a Gröbner–Shirshov basis; the rewrite
trail does.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .free_algebra import Alphabet, NcPolynomial, Word, word_key

__all__ = [
    "INTERSECTION", "INCLUSION",
    "RelationSet", "RewriteStep", "Composition", "CompositionCheck",
    "CompositionReport",
    "reduce", "normal_form", "intersection_compositions",
    "inclusion_compositions", "all_compositions", "is_trivial",
    "verify_gsb", "interreduce", "complete", "is_irreducible",
    "irreducible_words",
]

INTERSECTION = "intersection"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class RewriteStep:
    relation: int   # index into the RelationSet
    position: int   # offset of the leading word inside ``word``
    word: Word      # word that was rewritten
    coefficient: Fraction


class RelationSet:
    """An immutable list of monic relations over one alphabet.

    ``labels`` are free-form tags (e.g. the family a relation came from);
    they are carried along for reporting only.
    """

    def __init__(self, alphabet: Alphabet, relations: Iterable[NcPolynomial] = (),
                 labels: Optional[Sequence[str]] = None):
        rels = tuple(relations)
        for k, r in enumerate(rels):
            if r.alphabet != alphabet:
                raise ValueError(f"relation {k} is over a different alphabet")
            if not r:
                raise ValueError(f"relation {k} is zero")
            if r.has_primed():
                raise ValueError(f"relation {k} contains a primed letter; "
                                 "substitute primed generators first")
            if not r.is_monic():
                raise ValueError(f"relation {k} is not monic: {r}")
        if labels is None:
            labels = [""] * len(rels)
        if len(labels) != len(rels):
            raise ValueError("one label per relation required")
        self.alphabet = alphabet
        self.relations = rels
        self.labels = tuple(labels)
        self.leading_words: Tuple[Word, ...] = tuple(r.leading_word() for r in rels)
        # tail = lead - relation, i.e. the rewrite rule lead -> tail
        self._tails: Tuple[Tuple[Tuple[Word, Fraction], ...], ...] = tuple(
            tuple((w, -c) for w, c in r._terms.items() if w != lw)
            for r, lw in zip(rels, self.leading_words))
        index: Dict[Word, int] = {}
        for k, lw in enumerate(self.leading_words):
            index.setdefault(lw, k)   # smallest id wins
        self._index = index
        self._lengths = tuple(sorted({len(lw) for lw in self.leading_words}))

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __getitem__(self, k):
        return self.relations[k]

    def __repr__(self):
        return f"RelationSet(dim={self.alphabet.dim}, {len(self)} relations)"

    def find(self, w: Word) -> Optional[Tuple[int, int]]:
        """``(relation id, position)`` of the rewrite to apply to ``w``, or None."""
        best = None
        n = len(w)
        index = self._index
        for pos in range(n):
            for L in self._lengths:
                if pos + L > n:
                    break
                k = index.get(w[pos:pos + L])
                if k is not None and (best is None or k < best[0]):
                    best = (k, pos)
        return best

    def contains_leading_word(self, w: Word) -> bool:
        index = self._index
        n = len(w)
        for L in self._lengths:
            for pos in range(n - L + 1):
                if w[pos:pos + L] in index:
                    return True
        return False

    def extended(self, more: Iterable[NcPolynomial], labels: Optional[Sequence[str]] = None) -> "RelationSet":
        more = list(more)
        if labels is None:
            labels = [""] * len(more)
        return RelationSet(self.alphabet, self.relations + tuple(more), self.labels + tuple(labels))


def _reduce(p: NcPolynomial, S: RelationSet, trail: Optional[list]) -> NcPolynomial:
    if p.alphabet != S.alphabet:
        raise ValueError("polynomial and relation set use different alphabets")
    work: Dict[Word, Fraction] = dict(p._terms)
    for w in work:
        S.alphabet.check_ordered(w)
    heap = [(-len(w), tuple(-c for c in w)) for w in work]
    heapq.heapify(heap)
    out: Dict[Word, Fraction] = {}
    tails = S._tails
    lead_len = [len(lw) for lw in S.leading_words]
    while heap:
        _, neg = heapq.heappop(heap)
        w = tuple(-c for c in neg)
        c = work.pop(w, None)
        if c is None:
            continue
        hit = S.find(w)
        if hit is None:
            out[w] = c
            continue
        k, pos = hit
        if trail is not None:
            trail.append(RewriteStep(k, pos, w, c))
        left, right = w[:pos], w[pos + lead_len[k]:]
        for t, tc in tails[k]:
            nw = left + t + right
            nc = work.get(nw, 0) + c * tc
            if nc:
                if nw not in work:
                    heapq.heappush(heap, (-len(nw), tuple(-x for x in nw)))
                work[nw] = nc
            elif nw in work:
                del work[nw]
    return NcPolynomial._raw(p.alphabet, out)


def reduce(p: NcPolynomial, S: RelationSet) -> Tuple[NcPolynomial, List[RewriteStep]]:
    """Normal form of ``p`` modulo ``S`` together with the rewrite trail."""
    trail: List[RewriteStep] = []
    return _reduce(p, S, trail), trail


def normal_form(p: NcPolynomial, S: RelationSet) -> NcPolynomial:
    return _reduce(p, S, None)


@dataclass(frozen=True)
class Composition:
    kind: str
    left: int
    right: int
    word: Word
    polynomial: NcPolynomial
    position: int = 0   # where the right leading word starts inside ``word``


def intersection_compositions(f: NcPolynomial, g: NcPolynomial,
                              left: int = 0, right: int = 0) -> List[Composition]:
    """Compositions ``f*b - a*g`` for every proper overlap of a suffix of
    lead(f) with a prefix of lead(g)."""
    fw, gw = f.leading_word(), g.leading_word()
    out = []
    for k in range(min(len(fw), len(gw)) - 1, 0, -1):
        if fw[-k:] == gw[:k]:
            a, b = fw[:-k], gw[k:]
            w = fw + b
            h = f.lrmul((), b) - g.lrmul(a, ())
            out.append(Composition(INTERSECTION, left, right, w, h, len(a)))
    return out


def inclusion_compositions(f: NcPolynomial, g: NcPolynomial,
                           left: int = 0, right: int = 0) -> List[Composition]:
    """Compositions ``f - a*g*b`` for every occurrence of lead(g) in lead(f)."""
    fw, gw = f.leading_word(), g.leading_word()
    out = []
    L = len(gw)
    for pos in range(len(fw) - L + 1):
        if fw[pos:pos + L] == gw:
            h = f - g.lrmul(fw[:pos], fw[pos + L:])
            out.append(Composition(INCLUSION, left, right, fw, h, pos))
    return out


def all_compositions(S: RelationSet, max_degree: Optional[int] = None) -> List[Composition]:
    """Every composition of every ordered pair of ``S``, self-pairs included.

    A relation is not composed with itself by inclusion (that composition
    is identically zero).
    """
    out = []
    rels = S.relations
    for i, f in enumerate(rels):
        for j, g in enumerate(rels):
            comps = intersection_compositions(f, g, i, j)
            if i != j:
                comps += inclusion_compositions(f, g, i, j)
            if max_degree is not None:
                comps = [c for c in comps if len(c.word) <= max_degree]
            out.extend(comps)
    return out


def is_trivial(c: Composition, S: RelationSet) -> Tuple[bool, List[RewriteStep]]:
    """Whether the composition reduces to zero modulo ``S``.

    Every word of ``c.polynomial`` is below ``c.word`` and each rewrite
    only lowers words, so a zero normal form is a witness of triviality
    modulo (S, w).
    """
    nf, trail = reduce(c.polynomial, S)
    return not nf, trail


@dataclass(frozen=True)
class CompositionCheck:
    composition: Composition
    normal_form: NcPolynomial
    trail: Tuple[RewriteStep, ...]

    @property
    def trivial(self) -> bool:
        return not self.normal_form


@dataclass
class CompositionReport:
    relations: RelationSet
    checks: List[CompositionCheck] = field(default_factory=list)

    @property
    def all_trivial(self) -> bool:
        return all(c.trivial for c in self.checks)

    def __bool__(self):
        return self.all_trivial

    @property
    def failures(self) -> List[CompositionCheck]:
        return [c for c in self.checks if not c.trivial]

    def counts(self) -> Dict[str, int]:
        kinds = {INTERSECTION: 0, INCLUSION: 0}
        for c in self.checks:
            kinds[c.composition.kind] += 1
        return kinds


def verify_gsb(S: RelationSet, keep_trails: bool = True) -> CompositionReport:
    """Check every composition of ``S``; the set is a Gröbner–Shirshov
    basis iff the returned report is all-trivial."""
    report = CompositionReport(S)
    for comp in all_compositions(S):
        if keep_trails:
            nf, trail = reduce(comp.polynomial, S)
        else:
            nf, trail = normal_form(comp.polynomial, S), []
        report.checks.append(CompositionCheck(comp, nf, tuple(trail)))
    return report


def interreduce(alphabet: Alphabet, polys: Iterable[NcPolynomial]) -> List[NcPolynomial]:
    """Monic, fully inter-reduced generating set of the same ideal.

    No leading word contains another one as a factor, and no word of any
    relation contains a foreign leading word.  Sorted by leading word.
    """
    G = {}
    pending = [p for p in polys if p]
    while pending:
        p = pending.pop()
        S = RelationSet(alphabet, list(G.values()))
        p = normal_form(p, S)
        if not p:
            continue
        p = p.make_monic()
        lw = p.leading_word()
        # relations whose leading word is now reducible go back to pending
        for w in list(G):
            if _is_factor(lw, w):
                pending.append(G.pop(w))
        G[lw] = p
    # tail reduction
    out = []
    keys = sorted(G, key=word_key)
    for lw in keys:
        others = RelationSet(alphabet, [G[w] for w in keys if w != lw])
        p = G[lw]
        tail = p - NcPolynomial._raw(alphabet, {lw: Fraction(1)})
        out.append(NcPolynomial.monomial(alphabet, lw) + normal_form(tail, others))
    return out


def _is_factor(u: Word, w: Word) -> bool:
    n, m = len(u), len(w)
    return any(w[i:i + n] == u for i in range(m - n + 1))


def complete(S: RelationSet, max_degree: int) -> Tuple[RelationSet, bool]:
    """Bounded Shirshov completion.

    Compositions whose ambiguity word has length at most ``max_degree``
    are reduced and their non-zero normal forms adjoined, until every such
    composition is trivial.  ``saturated`` reports whether *all*
    compositions of the result, of any length, are trivial, i.e. whether
    the result is a Gröbner–Shirshov basis.
    """
    if S.relations and max_degree < max(len(w) for w in S.leading_words):
        raise ValueError("max_degree is below the degree of an input relation")
    alphabet = S.alphabet
    G = interreduce(alphabet, S.relations)
    seen = set()
    while True:
        current = RelationSet(alphabet, G)
        new = []
        for comp in all_compositions(current, max_degree):
            key = (current[comp.left], current[comp.right], comp.kind, comp.word, comp.position)
            if key in seen:
                continue
            seen.add(key)
            h = normal_form(comp.polynomial, current)
            if h:
                new.append(h.make_monic())
        if not new:
            break
        G = interreduce(alphabet, G + new)
    result = RelationSet(alphabet, G)
    saturated = verify_gsb(result, keep_trails=False).all_trivial
    return result, saturated


def is_irreducible(w: Word, S: RelationSet) -> bool:
    return not S.contains_leading_word(w)


def irreducible_words(S: RelationSet, n: int) -> List[Word]:
    """All words of length ``n`` with no leading word of ``S`` as a factor,
    in increasing deg-lex order.

    Built letter by letter; only suffixes need checking because the
    prefix is already irreducible.
    """
    letters = list(S.alphabet.ordered_codes)
    lengths = S._lengths
    index = S._index
    level: List[Word] = [()]
    for _ in range(n):
        nxt = []
        for w in level:
            for x in letters:
                v = w + (x,)
                m = len(v)
                if not any(L <= m and v[m - L:] in index for L in lengths):
                    nxt.append(v)
        level = nxt
    return level
