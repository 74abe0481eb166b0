"""Multiplicative dependence of integer vectors.

A vector of nonzero integers (ν_1, ..., ν_n) is multiplicatively dependent
when some nonzero integer vector k satisfies ν_1**k_1 · ... · ν_n**k_n = 1.
Everything here decides that exactly, through linear algebra on the matrix of
prime exponents: row i lists the exponents of |ν_i| over the primes occurring
in the vector.  A relation is an integer vector annihilating every prime
column whose sign product is +1; a kernel vector with sign product −1 is
repaired by doubling, since −1 is 2-torsion.

Witnesses are verified symbolically (per-prime exponent sums and the sign
product), never by evaluating integer powers, so huge exponents are safe.

Vectors must have nonzero coordinates throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import arith


def validate_vector(nu) -> tuple[int, ...]:
    v = tuple(int(x) for x in nu)
    if not v:
        raise ValueError("vector must have dimension >= 1")
    if any(x == 0 for x in v):
        raise ValueError("vector coordinates must be nonzero")
    return v


@dataclass(frozen=True)
class ExponentMatrix:
    """Per-coordinate prime exponent rows (ascending primes) plus sign bits."""

    primes: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]


def exponent_matrix(nu) -> ExponentMatrix:
    nu = validate_vector(nu)
    facts = [arith._abs_exponents(abs(x)) for x in nu]
    primes = sorted({p for f in facts for p, _ in f})
    index = {p: i for i, p in enumerate(primes)}
    rows = []
    for f in facts:
        row = [0] * len(primes)
        for p, e in f:
            row[index[p]] = e
        rows.append(tuple(row))
    signs = tuple(1 if x > 0 else -1 for x in nu)
    return ExponentMatrix(tuple(primes), tuple(rows), signs)


# ── exact integer linear algebra ─────────────────────────────────────────


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.  Returns (rows, pivot column list).

    Cross-multiplication keeps every intermediate entry an integer; rows are
    divided by their content to control growth.
    """
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    top = 0
    for col in range(ncols):
        piv = None
        for r in range(top, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        lead = mat[top][col]
        for r in range(top + 1, len(mat)):
            x = mat[r][col]
            if x == 0:
                continue
            row = [lead * a - x * b for a, b in zip(mat[r], mat[top])]
            g = 0
            for a in row:
                g = math.gcd(g, a)
            if g > 1:
                row = [a // g for a in row]
            mat[r] = row
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank_of_rows(rows) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    return len(_echelon(rows)[0])


def right_kernel_basis(rows, ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : M x = 0}, deterministic order.

    One basis vector per free column, ascending; each is reduced to content 1
    with its first nonzero entry positive.
    """
    ech, pivots = _echelon([list(r) for r in rows if any(r)])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(ech) - 1, -1, -1):
            col = pivots[r]
            s = Fraction(0)
            for c in range(col + 1, ncols):
                if ech[r][c]:
                    s += ech[r][c] * x[c]
            x[col] = -s / ech[r][col]
        den = math.lcm(*(q.denominator for q in x))
        ints = [int(q * den) for q in x]
        g = 0
        for a in ints:
            g = math.gcd(g, a)
        if g > 1:
            ints = [a // g for a in ints]
        lead = next(a for a in ints if a != 0)
        if lead < 0:
            ints = [-a for a in ints]
        basis.append(tuple(ints))
    return basis


def _relation_lattice_basis(nu) -> list[tuple[int, ...]]:
    """Kernel of the exponent rows (sign ignored): transpose and solve."""
    em = exponent_matrix(nu)
    n = len(em.rows)
    cols = [[em.rows[i][j] for i in range(n)] for j in range(len(em.primes))]
    return right_kernel_basis(cols, n)


def _sign_product(nu, k) -> int:
    s = 0
    for x, e in zip(nu, k):
        if x < 0:
            s += e
    return -1 if s % 2 else 1


def verify_relation(nu, k) -> bool:
    """Symbolic check that ∏ ν_i**k_i = 1: zero exponent sums, sign +1."""
    nu = validate_vector(nu)
    k = tuple(int(e) for e in k)
    if len(k) != len(nu) or not any(k):
        return False
    em = exponent_matrix(nu)
    for col in range(len(em.primes)):
        if sum(e * em.rows[i][col] for i, e in enumerate(k)) != 0:
            return False
    return _sign_product(nu, k) == 1


def is_dependent(nu) -> bool:
    """True iff some nonzero integer k gives ∏ ν_i**k_i = 1.

    A ±1 coordinate makes the vector dependent outright; otherwise the
    exponent rows must be linearly dependent over the rationals (any rational
    kernel vector scales to an integer relation, doubling if the sign product
    comes out −1).
    """
    nu = validate_vector(nu)
    if any(abs(x) == 1 for x in nu):
        return True
    em = exponent_matrix(nu)
    return rank_of_rows(em.rows) < len(nu)


def _primitive(k) -> tuple[int, ...]:
    g = 0
    for a in k:
        g = math.gcd(g, a)
    if g > 1:
        k = [a // g for a in k]
    lead = next((a for a in k if a != 0), 0)
    if lead < 0:
        k = [-a for a in k]
    return tuple(k)


def relation(nu):
    """A verified relation witness, or None for independent vectors.

    Preference order: unit vector at a coordinate equal to 1; twice a unit
    vector at a coordinate equal to −1; otherwise a kernel vector reduced to
    primitive form, doubled when its sign product is −1.
    """
    nu = validate_vector(nu)
    n = len(nu)
    for i, x in enumerate(nu):
        if x == 1:
            k = tuple(1 if j == i else 0 for j in range(n))
            assert verify_relation(nu, k)
            return k
    for i, x in enumerate(nu):
        if x == -1:
            k = tuple(2 if j == i else 0 for j in range(n))
            assert verify_relation(nu, k)
            return k
    basis = _relation_lattice_basis(nu)
    if not basis:
        return None
    k = _primitive(basis[0])
    if _sign_product(nu, k) == -1:
        k = tuple(2 * a for a in k)
    assert verify_relation(nu, k)
    return k


def mult_rank(nu) -> int:
    """Multiplicative rank.

    0 when some coordinate is ±1; otherwise the largest s such that every s
    coordinates are multiplicatively independent (n for a fully independent
    vector).  Subsets are scanned in increasing size with early exit, so the
    rank is one less than the size of the smallest dependent subset.
    """
    nu = validate_vector(nu)
    if any(abs(x) == 1 for x in nu):
        return 0
    rows = exponent_matrix(nu).rows
    n = len(nu)
    for size in range(2, n + 1):
        for sub in combinations(range(n), size):
            if rank_of_rows([rows[i] for i in sub]) < size:
                return size - 1
    return n


def full_support_relation(nu):
    """A verified relation with every exponent nonzero, or None.

    Exists iff the relation kernel is not contained in any coordinate
    hyperplane {k_i = 0}.  A combination of the kernel basis with coefficients
    1, L, L², ... is generically full-support; L grows on the rare collision.
    """
    nu = validate_vector(nu)
    n = len(nu)
    basis = _relation_lattice_basis(nu)
    if not basis:
        return None
    for i in range(n):
        if all(b[i] == 0 for b in basis):
            return None
    maxabs = max(abs(a) for b in basis for a in b)
    L = 1 + maxabs * n
    while True:
        k = [0] * n
        w = 1
        for b in basis:
            for i in range(n):
                k[i] += w * b[i]
            w *= L
        if all(k):
            k = _primitive(k)
            if _sign_product(nu, k) == -1:
                k = tuple(2 * a for a in k)
            if all(k) and verify_relation(nu, k):
                return tuple(k)
        L += 1 + maxabs


def has_full_support_relation(nu) -> bool:
    """True iff some relation uses every coordinate with nonzero exponent."""
    return full_support_relation(nu) is not None
