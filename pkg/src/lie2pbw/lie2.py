"""
Pairs of compatible Lie brackets and presentations of their universal
enveloping associative algebra.

A pair is given by structure constants

    [e_i, e_j]_1 = sum_k c[i][j][k] e_k,     [e_i, e_j]_2 = sum_k e[i][j][k] e_k

(0-based storage, 1-based in every user-facing message).  The enveloping
algebra is generated by x_1..x_d and x'_1..x'_d subject to

    x y - y x - [x, y]_1,   x' y' - y' x' - [x, y]_2',   x y - x y' - x' y + x' y'

Generators are renamed f_i := x_i, F_i := f_i - f'_i for rewriting.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .free_algebra import Alphabet, NcPolynomial
from .rewriting import RelationSet

__all__ = [
    "LiePair", "ValidationReport", "InvalidLiePairError", "Presentation",
    "ORIGINAL", "TRANSFORMED", "GSB_G0",
    "validate_lie_pair", "build_presentation_original", "transform_to_fF",
    "gsb_relations_g0", "family_counts",
    "LiePairFormatError", "parse_lie_pair", "load_lie_pair", "dump_lie_pair",
]

ORIGINAL = "original_xy_xprime"
TRANSFORMED = "transformed_fF"
GSB_G0 = "gsb_g0"

Tensor = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]


class InvalidLiePairError(ValueError):
    pass


def _zeros(d):
    return [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]


def _freeze(t) -> Tensor:
    return tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in t)


@dataclass(frozen=True)
class LiePair:
    dim: int
    bracket1: Tensor
    bracket2: Tensor

    def __post_init__(self):
        d = self.dim
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"dimension must be a positive integer, got {d!r}")
        for name in ("bracket1", "bracket2"):
            t = _freeze(getattr(self, name))
            if len(t) != d or any(len(p) != d or any(len(r) != d for r in p) for p in t):
                raise ValueError(f"{name} must have shape {d}x{d}x{d}")
            object.__setattr__(self, name, t)

    @classmethod
    def abelian(cls, dim: int) -> "LiePair":
        """Both brackets zero."""
        z = _zeros(dim)
        return cls(dim, z, z)

    @classmethod
    def from_entries(cls, dim: int, entries1=(), entries2=()) -> "LiePair":
        """Build from 1-based ``(i, j, k, value)`` entries with ``i < j``;
        the ``[e_j, e_i]`` values follow by antisymmetry."""
        tensors = []
        for entries in (entries1, entries2):
            t = _zeros(dim)
            for i, j, k, v in entries:
                if not (1 <= i < j <= dim and 1 <= k <= dim):
                    raise ValueError(f"bad bracket entry {(i, j, k)} for dimension {dim}")
                v = Fraction(v)
                t[i - 1][j - 1][k - 1] += v
                t[j - 1][i - 1][k - 1] -= v
            tensors.append(t)
        return cls(dim, *tensors)

    def is_abelian(self) -> bool:
        return not any(x for t in (self.bracket1, self.bracket2)
                       for p in t for r in p for x in r)

    def combination(self, alpha, beta) -> Tensor:
        """Structure constants of alpha*[,]_1 + beta*[,]_2."""
        a, b = Fraction(alpha), Fraction(beta)
        return tuple(tuple(tuple(a * x + b * y for x, y in zip(r1, r2))
                           for r1, r2 in zip(p1, p2))
                     for p1, p2 in zip(self.bracket1, self.bracket2))


@dataclass
class ValidationReport:
    failures: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def lines(self) -> List[str]:
        if self.ok:
            return ["valid: antisymmetry, Jacobi for both brackets, compatibility"]
        return [f"{name} fails at {triple}" for name, triple in self.failures]


def _jacobiator(a: Tensor, b: Tensor, i, j, k, l) -> Fraction:
    """Coefficient of e_l in [[e_i,e_j]_a, e_k]_b + cyclic."""
    d = len(a)
    s = Fraction(0)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        axy = a[x][y]
        for m in range(d):
            if axy[m]:
                s += axy[m] * b[m][z][l]
    return s


def _antisymmetry_failures(t: Tensor, name: str):
    d = len(t)
    out = []
    for i in range(d):
        for j in range(i, d):
            for k in range(d):
                if t[i][j][k] != -t[j][i][k]:
                    out.append((name, (i + 1, j + 1, k + 1)))
    return out


def jacobi_failures(t: Tensor, name: str = "jacobi"):
    d = len(t)
    out = []
    for i, j, k in itertools.combinations(range(d), 3):
        if any(_jacobiator(t, t, i, j, k, l) for l in range(d)):
            out.append((name, (i + 1, j + 1, k + 1)))
    return out


def validate_lie_pair(g: LiePair) -> ValidationReport:
    """Check that every combination alpha*[,]_1 + beta*[,]_2 is a Lie bracket.

    The Jacobiator of the combination is a quadratic form in (alpha, beta),
    so it vanishes identically iff the Jacobi identities of both brackets
    and the mixed Jacobiator vanish.  Jacobiators of antisymmetric brackets
    are alternating, so distinct basis triples suffice.
    """
    c, e = g.bracket1, g.bracket2
    report = ValidationReport()
    report.failures += _antisymmetry_failures(c, "antisymmetry of bracket 1")
    report.failures += _antisymmetry_failures(e, "antisymmetry of bracket 2")
    if report.failures:
        return report
    report.failures += jacobi_failures(c, "Jacobi identity of bracket 1")
    report.failures += jacobi_failures(e, "Jacobi identity of bracket 2")
    d = g.dim
    for i, j, k in itertools.combinations(range(d), 3):
        if any(_jacobiator(c, e, i, j, k, l) + _jacobiator(e, c, i, j, k, l) for l in range(d)):
            report.failures.append(("compatibility (mixed Jacobiator)", (i + 1, j + 1, k + 1)))
    return report


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: Tuple[NcPolynomial, ...]
    provenance: str
    labels: Tuple[str, ...] = ()

    def relation_set(self) -> RelationSet:
        if self.provenance == ORIGINAL:
            raise ValueError("the original presentation uses unordered primed generators")
        return RelationSet(self.alphabet, self.relations, self.labels or None)

    def __len__(self):
        return len(self.relations)


def build_presentation_original(g: LiePair) -> Presentation:
    """Relations over x_i = f_i and x'_i = f'_i.

    Families one and two are written for i < j with the larger generator
    first; family three is written for every ordered pair (i, j).
    """
    report = validate_lie_pair(g)
    if not report:
        raise InvalidLiePairError("; ".join(report.lines()))
    A = Alphabet(g.dim)
    d = g.dim
    x = [NcPolynomial.monomial(A, (A.small(i),)) for i in range(1, d + 1)]
    xp = [NcPolynomial.monomial(A, (A.primed(i),)) for i in range(1, d + 1)]
    rels, labels = [], []
    for i in range(d):
        for j in range(i + 1, d):
            tail = NcPolynomial(A, {(A.small(k + 1),): g.bracket1[j][i][k] for k in range(d)})
            rels.append(x[j] * x[i] - x[i] * x[j] - tail)
            labels.append("bracket1")
    for i in range(d):
        for j in range(i + 1, d):
            tail = NcPolynomial(A, {(A.primed(k + 1),): g.bracket2[j][i][k] for k in range(d)})
            rels.append(xp[j] * xp[i] - xp[i] * xp[j] - tail)
            labels.append("bracket2")
    for i in range(d):
        for j in range(d):
            rels.append(x[i] * x[j] - x[i] * xp[j] - xp[i] * x[j] + xp[i] * xp[j])
            labels.append("mixed")
    return Presentation(A, tuple(rels), ORIGINAL, tuple(labels))


def transform_to_fF(p: Presentation) -> Presentation:
    """Substitute f'_i -> f_i - F_i and make every relation monic."""
    if p.provenance != ORIGINAL:
        raise ValueError(f"expected an original presentation, got {p.provenance}")
    A = p.alphabet
    rels, labels = [], []
    for r, lab in zip(p.relations, p.labels or [""] * len(p.relations)):
        for i in range(1, A.dim + 1):
            r = r.substitute(A.primed(i), A.poly(f"f{i} - F{i}"))
        if r:
            rels.append(r.make_monic())
            labels.append(lab)
    return Presentation(A, tuple(rels), TRANSFORMED, tuple(labels))


def gsb_relations_g0(d: int, big_descending: bool = False) -> Presentation:
    """The five relation families for the abelian pair, labelled (1)..(5).

    (1) f_j f_i - f_i f_j                       i < j
    (2) F_i F_j                                 all i, j
    (3) F_j f_i - F_i f_j + f_j F_i - f_i F_j   i < j
    (4) F_k f_j F_i - F_k f_i F_j               k <= i < j
    (5) F_k f_j F_i - F_i f_k F_j               i < k <= j

    With ``big_descending`` the same polynomials are built over the
    alphabet with F_d < ... < F_1; leading words (and signs after making
    the relations monic) change accordingly.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    A = Alphabet(d, big_descending)
    f = lambda i: A.small(i)
    F = lambda i: A.big(i)

    def poly(*terms):
        return NcPolynomial(A, {w: c for c, w in terms})

    rels, labels = [], []
    idx = range(1, d + 1)
    for i, j in itertools.combinations(idx, 2):
        rels.append(poly((1, (f(j), f(i))), (-1, (f(i), f(j)))))
        labels.append("(1)")
    for i in idx:
        for j in idx:
            rels.append(poly((1, (F(i), F(j)))))
            labels.append("(2)")
    for i, j in itertools.combinations(idx, 2):
        rels.append(poly((1, (F(j), f(i))), (-1, (F(i), f(j))),
                         (1, (f(j), F(i))), (-1, (f(i), F(j)))))
        labels.append("(3)")
    for k in idx:
        for i in range(k, d + 1):
            for j in range(i + 1, d + 1):
                rels.append(poly((1, (F(k), f(j), F(i))), (-1, (F(k), f(i), F(j)))))
                labels.append("(4)")
    for i in idx:
        for k in range(i + 1, d + 1):
            for j in range(k, d + 1):
                rels.append(poly((1, (F(k), f(j), F(i))), (-1, (F(i), f(k), F(j)))))
                labels.append("(5)")
    if big_descending:
        rels = [r.make_monic() for r in rels]
    return Presentation(A, tuple(rels), GSB_G0, tuple(labels))


def family_counts(p: Presentation) -> dict:
    out = {}
    for lab in p.labels:
        out[lab] = out.get(lab, 0) + 1
    return out


class LiePairFormatError(ValueError):
    pass


def parse_lie_pair(text: str) -> LiePair:
    """Read a pair from its JSON form::

        {"dim": 2,
         "bracket1": [[1, 2, 1, "1"]],
         "bracket2": [[1, 2, 2, "1"]]}

    An entry ``[i, j, k, "p/q"]`` with ``i < j`` means that
    ``[e_i, e_j]`` has coefficient p/q on ``e_k``.  Omitted entries are zero.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LiePairFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dim" not in doc:
        raise LiePairFormatError("expected an object with a 'dim' field")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise LiePairFormatError(f"dim must be a positive integer, got {dim!r}")
    unknown = set(doc) - {"dim", "bracket1", "bracket2"}
    if unknown:
        raise LiePairFormatError(f"unknown fields: {sorted(unknown)}")
    brackets = []
    for name in ("bracket1", "bracket2"):
        entries = []
        for entry in doc.get(name, []):
            if not (isinstance(entry, list) and len(entry) == 4):
                raise LiePairFormatError(f"{name}: entry {entry!r} is not [i, j, k, value]")
            i, j, k, value = entry
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
                raise LiePairFormatError(f"{name}: indices must be integers in {entry!r}")
            if not (1 <= i < j <= dim and 1 <= k <= dim):
                raise LiePairFormatError(f"{name}: need 1 <= i < j <= dim and 1 <= k <= dim in {entry!r}")
            try:
                value = Fraction(str(value))
            except (ValueError, ZeroDivisionError):
                raise LiePairFormatError(f"{name}: bad rational {value!r}") from None
            entries.append((i, j, k, value))
        brackets.append(entries)
    return LiePair.from_entries(dim, *brackets)


def load_lie_pair(path) -> LiePair:
    with open(path, encoding="utf-8") as fh:
        return parse_lie_pair(fh.read())


def dump_lie_pair(g: LiePair) -> str:
    doc = {"dim": g.dim}
    for name, t in (("bracket1", g.bracket1), ("bracket2", g.bracket2)):
        doc[name] = [[i + 1, j + 1, k + 1, str(t[i][j][k])]
                     for i in range(g.dim) for j in range(i + 1, g.dim)
                     for k in range(g.dim) if t[i][j][k]]
    return json.dumps(doc, indent=2) + "\n"
