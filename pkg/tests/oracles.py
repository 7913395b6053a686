"""Independent reference computations used to freeze expected values.

Nothing here imports the package: words are tuples of ("f", i) / ("F", i)
tokens and polynomials are plain dicts, so agreement with the library is
evidence rather than tautology.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def letters(d):
    return [("f", i) for i in range(1, d + 1)] + [("F", i) for i in range(1, d + 1)]


def all_words(d, n):
    return itertools.product(letters(d), repeat=n)


def pattern_ok(w):
    """Conditions a)-c) on a token word, written straight from the
    definition: split at the big letters, then check each block."""
    runs = [[]]
    bigs = []
    for kind, i in w:
        if kind == "F":
            bigs.append(i)
            runs.append([])
        else:
            runs[-1].append(i)
    s = len(bigs)
    if any(r != sorted(r) for r in runs):
        return False
    for k in range(1, s + 1):
        run = runs[k]
        if 0 < k < s and not run:
            return False
        if run and bigs[k - 1] > run[0]:
            return False
        if 0 < k < s and len(run) == 1 and run[0] > bigs[k]:
            return False
    return True


def avoids_leading_words(w):
    """No factor f_j f_i (i<j), F_i F_j, F_j f_i (i<j) or F_k f_j F_i
    (i<j, k<=j)."""
    for (a, p), (b, q) in zip(w, w[1:]):
        if a == "f" and b == "f" and p > q:
            return False
        if a == "F" and b == "F":
            return False
        if a == "F" and b == "f" and p > q:
            return False
    for (a, k), (b, j), (c, i) in zip(w, w[1:], w[2:]):
        if (a, b, c) == ("F", "f", "F") and i < j and k <= j:
            return False
    return True


def brute_force_count(d, n, pred=pattern_ok):
    return sum(1 for w in all_words(d, n) if pred(w))


def dfs_count(d, N):
    """r_0..r_N by depth-first extension, checking only the new suffix."""
    counts = [0] * (N + 1)
    alph = letters(d)

    def go(w):
        counts[len(w)] += 1
        if len(w) == N:
            return
        for x in alph:
            v = w + (x,)
            if avoids_leading_words(v[-3:]):
                go(v)

    go(())
    return counts


def fibonacci(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# -- dimension of a graded quotient of the free algebra, by exact rank --

def _rank(rows, ncols):
    """Rank over Q of sparse rows {col: Fraction}."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = max(row)
            if c not in pivots:
                pivots[c] = row
                rank += 1
                break
            prow = pivots[c]
            f = row[c] / prow[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def g0_relations_xy(d):
    """Quadratic relations of the abelian pair over x_i, x'_i, as dicts
    word -> coefficient.  Letters are ("x", i) and ("y", i) for x'_i."""
    rels = []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            rels.append({(("x", j), ("x", i)): 1, (("x", i), ("x", j)): -1})
            rels.append({(("y", j), ("y", i)): 1, (("y", i), ("y", j)): -1})
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            r = {}
            for w, c in (((("x", i), ("x", j)), 1), ((("x", i), ("y", j)), -1),
                         ((("y", i), ("x", j)), -1), ((("y", i), ("y", j)), 1)):
                r[w] = r.get(w, 0) + c
            rels.append({w: c for w, c in r.items() if c})
    return rels


def quotient_dimension(d, n, rels=None):
    """dim of the degree-n part of <x, x'> / (quadratic relations)."""
    rels = g0_relations_xy(d) if rels is None else rels
    gens = [("x", i) for i in range(1, d + 1)] + [("y", i) for i in range(1, d + 1)]
    words = list(itertools.product(gens, repeat=n))
    col = {w: k for k, w in enumerate(words)}
    rows = []
    for r in rels:
        m = len(next(iter(r)))
        for pos in range(n - m + 1):
            for u in itertools.product(gens, repeat=pos):
                for v in itertools.product(gens, repeat=n - m - pos):
                    rows.append({col[u + w + v]: Fraction(c) for w, c in r.items()})
    return len(words) - _rank(rows, len(words))
