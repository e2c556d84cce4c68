"""Diagonal equations a1*x1^k1 + a2*x2^k2 = b over GF(q).

Solution counts are exact and computed in O(q) by histogramming the
value multiset of one term and scanning the other.  The classical bound

    |N - q| <= [(d1-1)(d2-1) - (1 - q^{-1/2}) M(d1,d2)] * sqrt(q),

with d_i = gcd(k_i, q-1) and M counting exponent pairs (j1, j2),
1 <= j_i <= d_i - 1, with j1/d1 + j2/d2 integral, is decided entirely in
integer arithmetic: writing the right side as A*sqrt(q) + M, the test
|N - q| - M <= A*sqrt(q) squares both sides after a sign check, so no
float ever influences the verdict.

Two specialized families drive the quotient construction.  For orbits
n and j of the i-th orbital graph the deciding equations are

* both orbits in the infinity family:  x^2 + c*y^10 = 1, c = -theta^(2(j-i+n)-1)
* infinity to zero family:             theta*x^2 + c*y^10 = -1, c = -theta^(2(j-i+n))
* both in the zero family:             same form as the first, same c

A solution with nonzero second coordinate generically yields a double
edge between the orbits, because (x1, y) and (-x1, y) map to distinct
group elements.  That pairing degenerates when x1 = 0: over GF(81) the
crossing equations with j - i + n = 0 (mod 5) admit only x1 = 0
solutions and the corresponding orbit pairs carry a single edge (see
tests/test_quotient.py for the pinned pattern).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import Field

PAIR_INF_INF = 1
PAIR_INF_ZERO = 2
PAIR_ZERO_ZERO = 3


@dataclass(frozen=True)
class DiagonalEquation:
    a1: int
    k1: int
    a2: int
    k2: int
    b: int

    def validate(self, field: Field) -> None:
        if self.a1 == 0 or self.a2 == 0:
            raise ValueError("coefficients a1, a2 must be nonzero")
        if self.k1 < 1 or self.k2 < 1:
            raise ValueError("exponents must be positive")
        for v in (self.a1, self.a2, self.b):
            if not 0 <= v < field.order:
                raise ValueError(f"{v} is not an element handle of {field!r}")


def _term_values(field: Field, a: int, e: int) -> list[int]:
    """a*x^e for every x in GF(q), as a list indexed by x."""
    km1 = field.order - 1
    la = field.dlog(a)
    exp, log = field._exp, field._log
    out = [0] * field.order
    for x in range(1, field.order):
        out[x] = exp[(la + log[x] * e) % km1]
    return out


def count_solutions(field: Field, eq: DiagonalEquation) -> int:
    """Number of pairs (x1, x2) satisfying the equation; O(q)."""
    eq.validate(field)
    hist: dict[int, int] = {}
    for v in _term_values(field, eq.a2, eq.k2):
        hist[v] = hist.get(v, 0) + 1
    sub = field.sub
    b = eq.b
    return sum(hist.get(sub(b, v), 0) for v in _term_values(field, eq.a1, eq.k1))


def count_nonzero_x2(field: Field, eq: DiagonalEquation) -> int:
    """Solutions with x2 != 0."""
    eq.validate(field)
    t2 = _term_values(field, eq.a2, eq.k2)
    hist: dict[int, int] = {}
    for v in t2[1:]:
        hist[v] = hist.get(v, 0) + 1
    sub = field.sub
    b = eq.b
    return sum(hist.get(sub(b, v), 0) for v in _term_values(field, eq.a1, eq.k1))


def has_nonzero_x2_solution(field: Field, eq: DiagonalEquation) -> bool:
    return count_nonzero_x2(field, eq) > 0


def m_pairs(d1: int, d2: int) -> int:
    """Pairs (j1, j2), 1 <= j_i <= d_i - 1, with j1/d1 + j2/d2 an integer."""
    if d1 < 1 or d2 < 1:
        raise ValueError("d1, d2 must be >= 1")
    count = 0
    for j1 in range(1, d1):
        for j2 in range(1, d2):
            if (j1 * d2 + j2 * d1) % (d1 * d2) == 0:
                count += 1
    return count


@dataclass(frozen=True)
class WeilReport:
    N: int
    d1: int
    d2: int
    M: int
    bound: float
    holds: bool


def le_times_sqrt(lhs: int, a: int, q: int) -> bool:
    """Exact decision of lhs <= a*sqrt(q) for integers lhs, a and q >= 0."""
    if lhs <= 0:
        return True if a >= 0 else lhs * lhs >= a * a * q
    if a < 0:
        return False
    return lhs * lhs <= a * a * q


def weil_check(field: Field, eq: DiagonalEquation) -> WeilReport:
    """Exact-arithmetic check of the solution-count bound; needs b != 0."""
    eq.validate(field)
    if eq.b == 0:
        raise ValueError("the bound requires b != 0")
    q = field.order
    d1 = math.gcd(eq.k1, q - 1)
    d2 = math.gcd(eq.k2, q - 1)
    M = m_pairs(d1, d2)
    N = count_solutions(field, eq)
    # |N - q| <= A*sqrt(q) + M with A = (d1-1)(d2-1) - M
    A = (d1 - 1) * (d2 - 1) - M
    holds = le_times_sqrt(abs(N - q) - M, A, q)
    return WeilReport(N=N, d1=d1, d2=d2, M=M,
                      bound=A * math.sqrt(q) + M, holds=holds)


# --- the specialized equations behind the quotient's double edges ---

def double_edge_equation(field: Field, pair_type: int, i: int, j: int,
                         n: int) -> DiagonalEquation:
    """Equation deciding d >= 2 between orbits n and j of orbital graph i.

    pair_type selects which of the two orbit families each side lies in:
    PAIR_INF_INF, PAIR_INF_ZERO or PAIR_ZERO_ZERO (bases over beta = inf
    resp. beta = 0).
    """
    for v in (i, j, n):
        if not 0 <= v <= 4:
            raise ValueError(f"index {v} out of range 0..4")
    e = 2 * (j - i + n)
    if pair_type in (PAIR_INF_INF, PAIR_ZERO_ZERO):
        c = field.neg(field.pow(field.theta, e - 1))
        return DiagonalEquation(a1=1, k1=2, a2=c, k2=10, b=1)
    if pair_type == PAIR_INF_ZERO:
        c = field.neg(field.pow(field.theta, e))
        return DiagonalEquation(a1=field.theta, k1=2, a2=c, k2=10,
                                b=field.neg(1))
    raise ValueError(f"unknown pair type {pair_type}")


def equation_for_orbit_pair(field: Field, orbital_index: int, a: int,
                            b: int) -> DiagonalEquation:
    """Map a pair of distinct quotient orbits (0..9) to its equation.

    Orbits 0..4 form the infinity family, 5..9 the zero family; a pair
    with only the source in the zero family is flipped (the multigraph is
    undirected, so d(A,B) = d(B,A)).
    """
    if a == b:
        raise ValueError("orbit pair must be distinct")
    for v in (a, b):
        if not 0 <= v <= 9:
            raise ValueError(f"orbit index {v} out of range 0..9")
    if a < 5 and b < 5:
        return double_edge_equation(field, PAIR_INF_INF, orbital_index, b, a)
    if a < 5 <= b:
        return double_edge_equation(field, PAIR_INF_ZERO, orbital_index, b - 5, a)
    if b < 5 <= a:
        return double_edge_equation(field, PAIR_INF_ZERO, orbital_index, a - 5, b)
    return double_edge_equation(field, PAIR_ZERO_ZERO, orbital_index, b - 5, a - 5)


def solvability_report(field: Field) -> list[str]:
    """One row per (k, pair_type, i, j, n): exact counts and the bound.

    Columns: k type i j n N_total N_nonzero bound holds.
    """
    rows = ["k type i j n N_total N_nonzero bound holds"]
    for pair_type in (PAIR_INF_INF, PAIR_INF_ZERO, PAIR_ZERO_ZERO):
        for i in range(5):
            for j in range(5):
                for n in range(5):
                    eq = double_edge_equation(field, pair_type, i, j, n)
                    rep = weil_check(field, eq)
                    nz = count_nonzero_x2(field, eq)
                    rows.append(
                        f"{field.order} {pair_type} {i} {j} {n} "
                        f"{rep.N} {nz} {rep.bound:.4f} {rep.holds}")
    return rows
