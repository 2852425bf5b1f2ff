"""Closed-form density bounds and the partition lower-bound polynomials.

Polynomial coefficients are exact rationals; optimization runs a dense
deterministic grid (numpy, float64) to locate the global region and then
refines with golden-section steps, finishing in 50-digit arithmetic so the
reported values carry well past the 10 digits the comparisons need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpf

from .refdata import TABLE1_M2, TABLE2_M3, ARC_BOUND_OPTIMA

GOLDEN = (math.sqrt(5) - 1) / 2


class BoundsError(ValueError):
    pass


@dataclass
class BoundPolynomial:
    """Homogeneous degree-(q+1) polynomial with positive rational coefficients.

    `constraint` pins the affine feasible set:
      - ("segment", t):  variables (alpha, beta), beta = 1 - t*alpha, 0 <= alpha <= 1/t
      - ("simplex", M):  variables (alpha, beta, gamma), alpha + beta + (M-1)*gamma = 1
    """
    variables: tuple[str, ...]
    monomials: dict[tuple[int, ...], Fraction]
    constraint: tuple[str, int]
    provenance: dict

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a rational point (tuple matching `variables`)."""
        total = Fraction(0)
        fr = [Fraction(x) for x in point]
        for expo, coeff in self.monomials.items():
            term = coeff
            for x, e in zip(fr, expo):
                term *= x ** e
            total += term
        return total

    def evaluate_mp(self, point) -> mpf:
        total = mpf(0)
        pt = [mpf(x) for x in point]
        for expo, coeff in self.monomials.items():
            term = mpf(coeff.numerator) / coeff.denominator
            for x, e in zip(pt, expo):
                term *= x ** e
            total += term
        return total

    def univariate(self) -> list[Fraction]:
        """Expansion in alpha alone after substituting the segment constraint.

        Index d is the coefficient of alpha^d.  Only defined for segment
        constraints.
        """
        if self.constraint[0] != "segment":
            raise BoundsError("univariate form needs the segment constraint")
        t = self.constraint[1]
        out = [Fraction(0)] * (max(sum(e) for e in self.monomials) + 1)
        for (i, j), coeff in self.monomials.items():
            # coeff * alpha^i * (1 - t*alpha)^j
            for r in range(j + 1):
                out[i + r] += coeff * math.comb(j, r) * Fraction(-t) ** r
        return out

    def factored_evaluator(self):
        """Float evaluator of the unexpanded form, for cross-checking."""
        if self.constraint[0] == "segment":
            t = self.constraint[1]
            terms = [(float(c), i, j) for (i, j), c in self.monomials.items()]

            def ev(alpha: float) -> float:
                beta = 1.0 - t * alpha
                return sum(c * alpha ** i * beta ** j for c, i, j in terms)

            return ev
        m_val = self.constraint[1]
        terms3 = [(float(c), e) for e, c in self.monomials.items()]

        def ev3(alpha: float, beta: float) -> float:
            gamma = (1.0 - alpha - beta) / (m_val - 1)
            return sum(c * alpha ** e[0] * beta ** e[1] * gamma ** e[2]
                       for c, e in terms3)

        return ev3


@dataclass
class OptResult:
    argmax: dict[str, float]
    value: float
    value_str: str           # 50-digit evaluation at the argmax
    grid_best: tuple
    refined_best: tuple
    tolerance: float


def _sum_q_powers(m: int, q: int) -> int:
    return sum(q ** i for i in range(1, m + 1))


def theorem1_lower(m: int, q: int) -> Fraction:
    """General lower bound: prod_{i=1..q} (1 - i / sum_{j=1..m} q^j)."""
    if m < 2 or q < 2:
        raise BoundsError("need m >= 2 and q >= 2")
    s = _sum_q_powers(m, q)
    v = Fraction(1)
    for i in range(1, q + 1):
        v *= 1 - Fraction(i, s)
    return v


def theorem1_upper(m: int, q: int) -> Fraction:
    """General upper bound: 1 - 1 / C(q^m, q)."""
    return 1 - Fraction(1, math.comb(q ** m, q))


def pg2_upper(m: int) -> Fraction:
    """Improved upper bound for the binary geometries, split by parity of m."""
    if m % 2 == 1:
        return 1 - Fraction(3, 2 ** (2 * m) - 1)
    return 1 - Fraction(6, (2 ** m - 1) * (2 ** (m + 1) + 1))


def chromatic_lower(q: int, chi: int) -> Fraction:
    """Lower bound 1 - 1/(chi-1)^q from a chromatic-number argument."""
    if chi < 2:
        raise BoundsError("chromatic number must be at least 2")
    return 1 - Fraction(1, (chi - 1) ** q)


def corollary1_t(m: int, q: int) -> int:
    """Part count t = ceil(sum_{i=0}^{m-2} q^i * (q + sqrt(q))).

    For m = 2 this reduces to q + ceil(sqrt(q)).  The ceiling is computed with
    exact integer square roots, so no precision can be lost near integers.
    """
    if m == 2:
        if q < 2:
            raise BoundsError("need q >= 2")
        r = math.isqrt(q)
        return q + (r if r * r == q else r + 1)
    if m < 2:
        raise BoundsError("need m >= 2")
    if q < 5:
        raise BoundsError("the blocking-set size bound needs q >= 5 when m >= 3")
    s = sum(q ** i for i in range(m - 1))
    # ceil(s*q + s*sqrt(q)) = s*q + ceil(sqrt(s^2 * q))
    n = s * s * q
    r = math.isqrt(n)
    return s * q + (r if r * r == n else r + 1)


def theorem2_polynomial(q: int, t: int) -> BoundPolynomial:
    """Density polynomial of the blocking-set partition, in (alpha, beta).

    (q+1)! * sum_{i=1..q} C(t, q+1-i) / i! * beta^i alpha^(q+1-i),
    with beta = 1 - t*alpha on the feasible segment.
    """
    if t < 1:
        raise BoundsError("need t >= 1")
    fact = math.factorial(q + 1)
    mono: dict[tuple[int, ...], Fraction] = {}
    for i in range(1, q + 1):
        c = math.comb(t, q + 1 - i)
        if c == 0:
            continue
        mono[(q + 1 - i, i)] = Fraction(fact * c, math.factorial(i))
    return BoundPolynomial(
        variables=("alpha", "beta"),
        monomials=mono,
        constraint=("segment", t),
        provenance={"family": "blocking-partition", "q": q, "t": t},
    )


def theorem3_polynomial(q: int, M: int) -> BoundPolynomial:
    """Density polynomial of the arc partition, in (alpha, beta, gamma).

    (q+1)! * sum_i sum_j C(M-1, q+1-i-j) / (i! j!) alpha^i beta^j gamma^(q+1-i-j)
    over 1 <= i <= q, max(0, q+2-M-i) <= j <= min(2, q+1-i), with the simplex
    constraint alpha + beta + (M-1) gamma = 1.
    """
    if M < 1:
        raise BoundsError("need M >= 1")
    fact = math.factorial(q + 1)
    mono: dict[tuple[int, ...], Fraction] = {}
    for i in range(1, q + 1):
        for j in range(max(0, q + 2 - M - i), min(2, q + 1 - i) + 1):
            k = q + 1 - i - j
            c = math.comb(M - 1, k)
            if c == 0:
                continue
            mono[(i, j, k)] = Fraction(fact * c,
                                       math.factorial(i) * math.factorial(j))
    return BoundPolynomial(
        variables=("alpha", "beta", "gamma"),
        monomials=mono,
        constraint=("simplex", M),
        provenance={"family": "arc-partition", "q": q, "M": M},
    )


def _golden_max(f, lo: float, hi: float, tol: float = 1e-13):
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


def _grid_segment(poly: BoundPolynomial, samples: int = 100_001):
    t = poly.constraint[1]
    alphas = np.linspace(0.0, 1.0 / t, samples)
    betas = 1.0 - t * alphas
    vals = np.zeros_like(alphas)
    for (i, j), c in poly.monomials.items():
        vals += float(c) * alphas ** i * betas ** j
    k = int(np.argmax(vals))
    return alphas, k, float(vals[k])


def _optimize_segment(poly: BoundPolynomial) -> OptResult:
    t = poly.constraint[1]
    alphas, k, grid_val = _grid_segment(poly)
    ev = poly.factored_evaluator()
    lo = alphas[max(k - 1, 0)]
    hi = alphas[min(k + 1, len(alphas) - 1)]
    x, v = _golden_max(ev, lo, hi)
    mp.dps = 50
    vs = poly.evaluate_mp((x, 1 - mpf(t) * x))
    return OptResult(
        argmax={"alpha": x, "beta": 1 - t * x},
        value=float(vs),
        value_str=mp.nstr(vs, 20),
        grid_best=(float(alphas[k]), grid_val),
        refined_best=(x, float(vs)),
        tolerance=1e-12,
    )


def _grid_simplex(poly: BoundPolynomial, step: float = 1 / 2000):
    m_val = poly.constraint[1]
    ticks = np.arange(0.0, 1.0 + step / 2, step)
    a, b = np.meshgrid(ticks, ticks, indexing="ij")
    keep = a + b <= 1.0 + 1e-12
    a, b = a[keep], b[keep]
    gmm = (1.0 - a - b) / (m_val - 1) if m_val > 1 else np.zeros_like(a)
    vals = np.zeros_like(a)
    for (i, j, k), c in poly.monomials.items():
        vals += float(c) * a ** i * b ** j * gmm ** k
    best = int(np.argmax(vals))
    return (float(a[best]), float(b[best])), float(vals[best])


def _optimize_simplex(poly: BoundPolynomial) -> OptResult:
    m_val = poly.constraint[1]
    (a0, b0), grid_val = _grid_simplex(poly)
    ev = poly.factored_evaluator()
    a, b = a0, b0
    # coordinate-wise golden section on the feasible segments through the incumbent
    for _ in range(400):
        a_new, _ = _golden_max(lambda x: ev(x, b), 0.0, 1.0 - b)
        b_new, _ = _golden_max(lambda y: ev(a_new, y), 0.0, 1.0 - a_new)
        moved = max(abs(a_new - a), abs(b_new - b))
        a, b = a_new, b_new
        if moved < 1e-12:
            break
    mp.dps = 50
    gm = (1 - mpf(a) - mpf(b)) / (m_val - 1) if m_val > 1 else mpf(0)
    vs = poly.evaluate_mp((a, b, gm))
    return OptResult(
        argmax={"alpha": a, "beta": b, "gamma": float(gm)},
        value=float(vs),
        value_str=mp.nstr(vs, 20),
        grid_best=((a0, b0), grid_val),
        refined_best=((a, b), float(vs)),
        tolerance=1e-12,
    )


def optimize_bound(poly: BoundPolynomial) -> OptResult:
    """Deterministic two-stage maximization over the polynomial's feasible set."""
    if poly.constraint[0] == "segment":
        return _optimize_segment(poly)
    return _optimize_simplex(poly)


# --- table reproduction -------------------------------------------------------

def printed_decimals(s: str) -> int:
    return len(s.split(".")[1]) if "." in s else 0


def significant_digits(s: str) -> int:
    digits = s.replace("-", "").replace(".", "").lstrip("0")
    return len(digits)


def match_value(computed: float, printed: str, cap: int) -> bool:
    """Match at min(cap, printed decimals), one unit of slack in the last digit."""
    d = min(cap, printed_decimals(printed))
    return abs(computed - float(printed)) <= 10.0 ** (-d) + 1e-15


def match_alpha(computed: float, printed: str, cap: int = 4) -> bool:
    """Match the argmax column at min(cap, significant digits) significant digits."""
    target = float(printed)
    d = min(cap, significant_digits(printed))
    if target == 0:
        return abs(computed) <= 10.0 ** (-d)
    scale = 10.0 ** (math.floor(math.log10(abs(target))) - d + 1)
    return abs(computed - target) <= scale + 1e-15


@dataclass
class TableRow:
    q: int
    m: int
    t: int
    thm1: float
    thm1_exact: Fraction
    cor1: float
    alpha: float
    printed: tuple[str, str, str]
    thm1_ok: bool
    cor1_ok: bool
    alpha_ok: bool
    larger: str   # which column wins: "thm1" | "cor1"

    @property
    def ok(self) -> bool:
        return self.thm1_ok and self.cor1_ok and self.alpha_ok


def reproduce_tables() -> dict[str, list[TableRow]]:
    """Recompute both comparison tables and check every cell against the catalog."""
    out: dict[str, list[TableRow]] = {"table1": [], "table2": []}
    for name, table, m, cap in (("table1", TABLE1_M2, 2, 4), ("table2", TABLE2_M3, 3, 10)):
        for q, (p_thm1, p_cor1, p_alpha) in table.items():
            t = corollary1_t(m, q)
            exact = theorem1_lower(m, q)
            thm1 = float(exact)
            res = optimize_bound(theorem2_polynomial(q, t))
            row = TableRow(
                q=q, m=m, t=t,
                thm1=thm1, thm1_exact=exact,
                cor1=res.value, alpha=res.argmax["alpha"],
                printed=(p_thm1, p_cor1, p_alpha),
                thm1_ok=match_value(thm1, p_thm1, cap),
                cor1_ok=match_value(res.value, p_cor1, cap),
                alpha_ok=match_alpha(res.argmax["alpha"], p_alpha),
                larger="thm1" if thm1 >= res.value else "cor1",
            )
            out[name].append(row)
    return out


def _catalog_argmax(M: int, printed_pt) -> dict[str, float]:
    """Decode a cataloged argmax triple against the simplex constraint.

    A triple that misses alpha + beta + (M-1)*gamma = 1 by more than print
    precision, but satisfies it once gamma is divided by M-1, lists the total
    z-part rate in its gamma column; rescale before comparing.
    """
    a, bta, gmm = (float(x) for x in printed_pt)
    if abs(a + bta + (M - 1) * gmm - 1) > 1e-6:
        alt = gmm / (M - 1)
        if abs(a + bta + (M - 1) * alt - 1) <= 1e-6:
            gmm = alt
    return {"alpha": a, "beta": bta, "gamma": gmm}


def reproduce_arc_optima() -> list[dict]:
    """Optimize the arc-partition polynomial for each small plane in the catalog."""
    rows = []
    for q, (M, printed_val, printed_pt) in ARC_BOUND_OPTIMA.items():
        poly = theorem3_polynomial(q, M)
        res = optimize_bound(poly)
        target = _catalog_argmax(M, printed_pt)
        rows.append({
            "q": q, "M": M,
            "value": res.value,
            "argmax": res.argmax,
            "printed_value": printed_val,
            "printed_argmax": target,
            "value_ok": abs(res.value - float(printed_val)) <= 1e-8,
            "argmax_ok": all(
                abs(res.argmax[n] - target[n]) <= 1e-4 for n in target
            ),
        })
    return rows
