"""
Counting basis words per degree and the growth rate of the algebra.

The basis language is factor-closed and is recognised by a small
deterministic automaton (states below), so r_n can be counted for large n
by dynamic programming over the transfer matrix.

    START                 nothing read yet
    BIG(k)                last letter F_k
    SMALL_AFTER_BIG(k,p)  last letter f_p, directly preceded by F_k
    SMALL_RUN(p)          last letter f_p, run of length >= 2 or inside w_0

Growth outputs use mpmath at ``DIGITS`` significant digits.
"""
from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from .basis import enumerate_pattern
from .free_algebra import Alphabet, Word

__all__ = [
    "DIGITS", "RECURRENCE_D2", "CUBIC_D2", "QUADRATIC_D1",
    "ForbiddenFactorAutomaton", "CountSeries", "BigStartSeries", "GrowthEstimate",
    "RecurrenceCheck", "UnsupportedError",
    "count_series", "big_start_series", "big_start_direct", "verify_recurrence",
    "verify_recurrence_d2", "verify_sum_relation", "verify_intermediate_s_relation",
    "poly_mul", "characteristic_polynomial_d2", "cubic_discriminant", "real_root",
    "largest_modulus_root", "growth_rate", "fekete_check", "remark_check",
    "series_csv",
]

DIGITS = 60

# r_n - 2 r_{n-1} - 2 r_{n-2} + 2 r_{n-3} + 3 r_{n-4} + 0 r_{n-5} - 2 r_{n-6} = 0,
# read off the sextic x^6 - 2x^5 - 2x^4 + 2x^3 + 3x^2 - 2.
RECURRENCE_D2 = (1, -2, -2, 2, 3, 0, -2)
CUBIC_D2 = (1, -1, -2, -2)          # x^3 - x^2 - 2x - 2
QUADRATIC_D1 = (1, -1, -1)          # x^2 - x - 1


class UnsupportedError(ValueError):
    pass


START = ("start",)


class ForbiddenFactorAutomaton:
    """Deterministic recogniser of the basis words for dimension ``d``.

    Every state is accepting; a missing transition rejects.  The forbidden
    factors are the leading words f_j f_i (i<j), F_i F_j, F_j f_i (i<j) and
    F_a f_p F_b with b < p.
    """

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("dimension must be at least 1")
        self.d = d
        self.alphabet = A = Alphabet(d)
        states: List[tuple] = [START]
        states += [("big", k) for k in range(1, d + 1)]
        states += [("sab", k, p) for k in range(1, d + 1) for p in range(k, d + 1)]
        states += [("run", p) for p in range(1, d + 1)]
        self.states = states
        self.start = START
        f = A.small
        F = A.big
        delta: Dict[tuple, Dict[int, tuple]] = {s: {} for s in states}
        for s in states:
            kind = s[0]
            if kind in ("start", "run"):
                lo = 1 if kind == "start" else s[1]
                for q in range(lo, d + 1):
                    delta[s][f(q)] = ("run", q)
                for b in range(1, d + 1):
                    delta[s][F(b)] = ("big", b)
            elif kind == "big":
                k = s[1]
                for p in range(k, d + 1):
                    delta[s][f(p)] = ("sab", k, p)
            else:
                _, k, p = s
                for q in range(p, d + 1):
                    delta[s][f(q)] = ("run", q)
                for b in range(p, d + 1):
                    delta[s][F(b)] = ("big", b)
        self.delta = delta

    def run(self, w: Word) -> Optional[tuple]:
        s = self.start
        for c in w:
            s = self.delta[s].get(c)
            if s is None:
                return None
        return s

    def accepts(self, w: Word) -> bool:
        return self.run(w) is not None

    def transfer_matrix(self) -> np.ndarray:
        """Integer matrix M with M[s, t] = number of letters taking s to t."""
        pos = {s: k for k, s in enumerate(self.states)}
        M = np.zeros((len(self.states), len(self.states)), dtype=np.int64)
        for s, out in self.delta.items():
            for t in out.values():
                M[pos[s], pos[t]] += 1
        return M

    def count(self, N: int) -> List[int]:
        """r_0..r_N by dynamic programming over states (exact integers)."""
        vec = {self.start: 1}
        out = [1]
        for _ in range(N):
            nxt: Dict[tuple, int] = {}
            for s, c in vec.items():
                for t in self.delta[s].values():
                    nxt[t] = nxt.get(t, 0) + c
            vec = nxt
            out.append(sum(vec.values()))
        return out


@dataclass(frozen=True)
class CountSeries:
    d: int
    values: Tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    @property
    def N(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class BigStartSeries:
    values: Tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class GrowthEstimate:
    method: str
    value: mpmath.mpf
    error_bound: mpmath.mpf

    def __float__(self):
        return float(self.value)


def count_series(d: int, N: int, method: str = "automaton") -> CountSeries:
    if d < 1 or N < 0:
        raise ValueError("need d >= 1 and N >= 0")
    if method == "automaton":
        values = ForbiddenFactorAutomaton(d).count(N)
    elif method == "enumerate":
        values = [len(enumerate_pattern(d, n)) for n in range(N + 1)]
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return CountSeries(d, tuple(values))


def big_start_series(r: CountSeries) -> BigStartSeries:
    """Basis words of length n starting with a big letter, from r alone.

    For d = 2: s_0 = 1, s_1 = 2 and s_n = r_n - 2 r_{n-1} + r_{n-2}.
    Other d invert r_n = sum_k C(k+d-1, d-1) s_{n-k} (a head monomial of
    length k followed by a big-start word) term by term.
    """
    if r.N < 2:
        raise ValueError("need r_0..r_2 at least")
    d = r.d
    if d == 2:
        s = [1, 2]
        for n in range(2, r.N + 1):
            s.append(r[n] - 2 * r[n - 1] + r[n - 2])
        return BigStartSeries(tuple(s))
    s = []
    for n in range(r.N + 1):
        s.append(r[n] - sum(comb(k + d - 1, d - 1) * s[n - k] for k in range(1, n + 1)))
    return BigStartSeries(tuple(s))


def big_start_direct(d: int, N: int) -> BigStartSeries:
    """Number of basis words of length n whose first letter is big,
    counted on the automaton (s_0 = 1 by convention)."""
    aut = ForbiddenFactorAutomaton(d)
    A = aut.alphabet
    vec: Dict[tuple, int] = {}
    for b in range(1, d + 1):
        vec[("big", b)] = vec.get(("big", b), 0) + 1
    out = [1]
    for n in range(1, N + 1):
        out.append(sum(vec.values()))
        nxt: Dict[tuple, int] = {}
        for s, c in vec.items():
            for t in aut.delta[s].values():
                nxt[t] = nxt.get(t, 0) + c
        vec = nxt
    return BigStartSeries(tuple(out))


@dataclass
class RecurrenceCheck:
    ok: bool
    failures: List[int]
    checked: range
    residuals: Dict[int, int]

    def __bool__(self):
        return self.ok


def verify_recurrence(r: Sequence[int], coefficients: Sequence[int]) -> RecurrenceCheck:
    """Check sum_k coefficients[k] * r[n-k] == 0 for every n with all terms
    available, i.e. ``order <= n <= N``."""
    order = len(coefficients) - 1
    N = len(r) - 1
    rng = range(order, N + 1)
    residuals = {n: sum(c * r[n - k] for k, c in enumerate(coefficients)) for n in rng}
    failures = [n for n, v in residuals.items() if v]
    return RecurrenceCheck(not failures, failures, rng, residuals)


def verify_recurrence_d2(r: CountSeries, coefficients: Sequence[int] = RECURRENCE_D2) -> RecurrenceCheck:
    """The degree-6 recurrence for d = 2, checked for 7 <= n <= N.

    With N < 7 nothing is checked; the result is vacuously true and a
    ``UserWarning`` is issued.
    """
    if r.d != 2:
        raise ValueError("the degree-6 recurrence is specific to d = 2")
    rng = range(7, r.N + 1)
    if not rng:
        warnings.warn("series too short: recurrence check is vacuous", UserWarning)
        return RecurrenceCheck(True, [], rng, {})
    full = verify_recurrence(r.values, coefficients)
    residuals = {n: full.residuals[n] for n in rng}
    failures = [n for n in rng if residuals[n]]
    return RecurrenceCheck(not failures, failures, rng, residuals)


def verify_sum_relation(r: CountSeries, s: BigStartSeries) -> RecurrenceCheck:
    """r_n = s_n + 2 s_{n-1} + ... + (n+1) s_0 (the d = 2 head count)."""
    rng = range(0, min(len(r), len(s)))
    residuals = {n: r[n] - sum((k + 1) * s[n - k] for k in range(n + 1)) for n in rng}
    failures = [n for n, v in residuals.items() if v]
    return RecurrenceCheck(not failures, failures, rng, residuals)


def verify_intermediate_s_relation(r: CountSeries, s: BigStartSeries, start: int = 3) -> Tuple[RecurrenceCheck, RecurrenceCheck]:
    """Check, for ``start <= n <= N``,

        s_n = r_{n-2} + (s_{n-2} - r_{n-4}) + 2 (s_{n-3} + ... + s_0)

    (terms with negative index are dropped) together with the parity of
    s_{n-2} - r_{n-4}.  Returns ``(identity check, parity check)``.
    """
    if r.d != 2:
        raise ValueError("the relation is specific to d = 2")

    def R(k):
        return r[k] if k >= 0 else 0

    def S(k):
        return s[k] if k >= 0 else 0

    N = min(len(r), len(s)) - 1
    rng = range(start, N + 1)
    res, par = {}, {}
    for n in rng:
        rhs = R(n - 2) + (S(n - 2) - R(n - 4)) + 2 * sum(S(k) for k in range(0, n - 2))
        res[n] = s[n] - rhs
        par[n] = (S(n - 2) - R(n - 4)) % 2
    f1 = [n for n in rng if res[n]]
    f2 = [n for n in rng if par[n]]
    return RecurrenceCheck(not f1, f1, rng, res), RecurrenceCheck(not f2, f2, rng, par)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    """Product of integer polynomials given as coefficient lists, highest
    degree first."""
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_eval(p: Sequence, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def characteristic_polynomial_d2():
    """Expand (x-1)^2 (x+1) (x^3 - x^2 - 2x - 2).

    Returns ``(expanded, factors, matches)`` where ``matches`` says whether
    the expansion equals the sextic behind ``RECURRENCE_D2``.
    """
    factors = [(1, -1), (1, -1), (1, 1), CUBIC_D2]
    expanded = [1]
    for fac in factors:
        expanded = poly_mul(expanded, fac)
    return expanded, factors, tuple(expanded) == RECURRENCE_D2


def cubic_discriminant(a, b, c, d) -> int:
    return 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d


def real_root(p: Sequence[int], lo, hi, digits: int = DIGITS) -> mpmath.mpf:
    """Root of ``p`` in ``[lo, hi]`` where p changes sign: exact bisection
    on rationals, then Newton steps kept inside the bracket."""
    lo, hi = Fraction(lo), Fraction(hi)
    flo, fhi = poly_eval(p, lo), poly_eval(p, hi)
    if flo == 0:
        return mpmath.mpf(lo.numerator) / lo.denominator
    if fhi == 0:
        return mpmath.mpf(hi.numerator) / hi.denominator
    if (flo > 0) == (fhi > 0):
        raise ValueError("no sign change on the bracket")
    for _ in range(40):
        mid = (lo + hi) / 2
        fm = poly_eval(p, mid)
        if fm == 0:
            return mpmath.mpf(mid.numerator) / mid.denominator
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    dp = [c * (len(p) - 1 - k) for k, c in enumerate(p[:-1])]
    with mpmath.workdps(digits + 10):
        a = mpmath.mpf(lo.numerator) / lo.denominator
        b = mpmath.mpf(hi.numerator) / hi.denominator
        x = (a + b) / 2
        for _ in range(60):
            step = poly_eval(p, x) / poly_eval(dp, x)
            x = x - step
            if not a <= x <= b:
                raise ArithmeticError("Newton step left the bracket")
            if abs(step) < mpmath.mpf(10) ** (-(digits + 5)):
                break
        return +x


def largest_modulus_root(p: Sequence[int], digits: int = DIGITS):
    with mpmath.workdps(digits + 10):
        roots = mpmath.polyroots(list(p), maxsteps=200, extraprec=200)
        return max(roots, key=abs)


def _closed_form(d: int):
    if d == 1:
        return (1 + mpmath.sqrt(5)) / 2
    if d == 2:
        s = 3 * mpmath.sqrt(114)
        return (1 + mpmath.cbrt(37 - s) + mpmath.cbrt(37 + s)) / 3
    raise UnsupportedError(f"no closed form growth rate for d = {d}")


def _spectral_radius(d: int, iterations: int) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Power iteration on the transfer matrix in exact integers.

    For the positive vector v = M^k 1, every ratio (M v)_i / v_i lies
    between min and max of those ratios, and the spectral radius does too
    (Collatz–Wielandt), which gives the error bound.
    """
    M = ForbiddenFactorAutomaton(d).transfer_matrix().astype(object)
    v = np.ones(M.shape[0], dtype=object)
    for _ in range(iterations):
        v = M.dot(v)
    w = M.dot(v)
    ratios = [Fraction(int(a), int(b)) for a, b in zip(w, v)]
    lo, hi = min(ratios), max(ratios)
    mid = (lo + hi) / 2
    return (mpmath.mpf(mid.numerator) / mid.denominator,
            mpmath.mpf((hi - lo).numerator) / (hi - lo).denominator / 2)


def growth_rate(d: int, method: str = "closed_form", n: int = 40, iterations: int = 200) -> GrowthEstimate:
    """Estimate the growth rate lim r_n^(1/n).

    ``nth_root`` and ``ratio`` use r_n (resp. r_n / r_{n-1}) at degree ``n``;
    their error bound is the change from degree n-1, a heuristic.
    ``spectral_radius`` runs ``iterations`` steps of power iteration and
    carries a rigorous Collatz–Wielandt bound.  ``closed_form`` exists for
    d in {1, 2}; its bound is the distance to an independent root
    computation.
    """
    with mpmath.workdps(DIGITS):
        if method == "closed_form":
            value = _closed_form(d)
            poly = QUADRATIC_D1 if d == 1 else CUBIC_D2
            root = real_root(poly, 1, 2) if d == 1 else real_root(poly, 2, 3)
            return GrowthEstimate(method, +value, abs(value - root))
        if method == "spectral_radius":
            value, err = _spectral_radius(d, iterations)
            return GrowthEstimate(method, value, err)
        if method in ("ratio", "nth_root"):
            if n < 2:
                raise ValueError("need n >= 2")
            r = count_series(d, n).values
            if method == "ratio":
                cur = mpmath.mpf(r[n]) / r[n - 1]
                prev = mpmath.mpf(r[n - 1]) / r[n - 2]
            else:
                cur = mpmath.root(mpmath.mpf(r[n]), n)
                prev = mpmath.root(mpmath.mpf(r[n - 1]), n - 1)
            return GrowthEstimate(method, cur, abs(cur - prev))
    raise ValueError(f"unknown growth method {method!r}")


def fekete_check(r: CountSeries) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Submultiplicativity r_{s+t} <= r_s r_t for all s + t <= N.

    Returns ``(ok, first violating (s, t) or None)``.
    """
    for total in range(r.N + 1):
        for s_ in range(total + 1):
            t = total - s_
            if r[total] > r[s_] * r[t]:
                return False, (s_, t)
    return True, None


def remark_check(tol: float = 1e-9) -> bool:
    """The growth rates for d = 1, 2 (by power iteration) equal the largest
    modulus roots of x^2 - x - 1 and x^3 - x^2 - 2x - 2."""
    with mpmath.workdps(DIGITS):
        for d, poly in ((1, QUADRATIC_D1), (2, CUBIC_D2)):
            est = growth_rate(d, "spectral_radius")
            root = largest_modulus_root(poly)
            if abs(mpmath.im(root)) > tol or abs(mpmath.re(root) - est.value) > tol:
                return False
    return True


def series_csv(d: int, N: int) -> str:
    """CSV with columns n, r_n, s_n, ratio, nth_root.

    s_n is computed directly on the automaton; ratio and nth_root are
    printed with 12 significant digits and left empty where undefined.
    """
    r = count_series(d, N)
    s = big_start_direct(d, N)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "r_n", "s_n", "ratio", "nth_root"])
    with mpmath.workdps(30):
        for n in range(N + 1):
            ratio = mpmath.nstr(mpmath.mpf(r[n]) / r[n - 1], 12) if n >= 1 else ""
            root = mpmath.nstr(mpmath.root(mpmath.mpf(r[n]), n), 12) if n >= 1 else ""
            w.writerow([n, r[n], s[n], ratio, root])
    return buf.getvalue()
