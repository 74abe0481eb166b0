"""Exact rational volumes of hyperplane sections of cubes.

The (n−1)-volume of {ν ∈ box : α·ν = r} always carries the irrational factor
‖α‖, so only the rational part Q = Vol / ‖α‖ is ever materialized.  For the
unit cube the signed inclusion–exclusion over the 2**n vertices gives

    Q = (1 / ((n−1)!·∏ α_i)) · Σ_{c ∈ {0,1}^n} (−1)^{#{c_i = 1}} max(r − α·c, 0)^{n−1}

and the centered cube [−1/2, 1/2]^n uses c ∈ {−1,1}^n with max(2r − α·c, 0)
and an extra 1/2^{n−1}.  The vertex sums walk a Gray code so each step
updates the running dot product by one coordinate.

The density V_α(B; J) = gcd(α)·Vol_{n−1}(B ∩ {α·ν = J}) / ‖α‖ is the exact
per-slice count of lattice points per unit of box growth; coordinates where
α_i = 0 are reduced away (each contributes one box side length) and scaled
boxes use Vol(t·B at level J) = t^{n−1}·Vol(B at level J/t).

Degenerate dimension 1 uses counting measure: a section that is a single
point inside the box has Vol_0 = 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import arith

BOXES = ("unit", "half", "scaled-positive", "scaled-symmetric")


def _validate_nonzero(alpha) -> tuple[int, ...]:
    a = tuple(int(x) for x in alpha)
    if not a:
        raise ValueError("alpha must have dimension >= 1")
    if any(x == 0 for x in a):
        raise ValueError("alpha must have all coordinates nonzero here")
    return a


def _gray_sum(alpha, shift: Fraction, deltas, power: int) -> Fraction:
    """Σ over vertex states of (−1)^{#set bits} · max(shift − dot, 0)**power.

    ``deltas[i]`` is the dot-product change when bit i flips on; the walk
    starts from the all-clear state with dot = 0.
    """
    n = len(alpha)
    total = Fraction(0)
    dot = 0
    parity = 1
    bits = 0
    arg = shift
    if arg > 0:
        total += arg**power
    for g in range(1, 1 << n):
        i = (g & -g).bit_length() - 1
        bit = 1 << i
        if bits & bit:
            dot -= deltas[i]
            parity = -parity
        else:
            dot += deltas[i]
            parity = -parity
        bits ^= bit
        arg = shift - dot
        if arg > 0:
            total += parity * arg**power
    return total


def mm_unit_cube_Q(alpha, r) -> Fraction:
    """Q with Vol_{n−1}({ν ∈ [0,1]^n : α·ν = r}) = Q·‖α‖ (α all nonzero)."""
    alpha = _validate_nonzero(alpha)
    r = Fraction(r)
    n = len(alpha)
    if n == 1:
        t = r / alpha[0]
        return Fraction(1, abs(alpha[0])) if 0 <= t <= 1 else Fraction(0)
    total = _gray_sum(alpha, r, alpha, n - 1)
    prod = 1
    for a in alpha:
        prod *= a
    q = total / (factorial(n - 1) * prod)
    assert q >= 0
    return q


def mm_half_cube_Q(alpha, r) -> Fraction:
    """Q for the centered cube [−1/2, 1/2]^n (α all nonzero)."""
    alpha = _validate_nonzero(alpha)
    r = Fraction(r)
    n = len(alpha)
    if n == 1:
        t = r / alpha[0]
        return Fraction(1, abs(alpha[0])) if -Fraction(1, 2) <= t <= Fraction(1, 2) else Fraction(0)
    # start at c = (−1, ..., −1); flipping bit i adds 2·α_i
    shift = 2 * r + sum(alpha)
    deltas = [2 * a for a in alpha]
    total = _gray_sum(alpha, Fraction(shift), deltas, n - 1)
    prod = 1
    for a in alpha:
        prod *= a
    q = total / (2 ** (n - 1) * factorial(n - 1) * prod)
    assert q >= 0
    return q


def simplex_Q(alpha, r) -> Fraction:
    """Q for the positive orthant: Vol_{n−1}({ν ≥ 0 : α·ν = r}) = Q·‖α‖.

    Requires all α_i > 0; Q = max(r, 0)^{n−1} / ((n−1)!·∏ α_i).
    """
    alpha = tuple(int(x) for x in alpha)
    if not alpha or any(a <= 0 for a in alpha):
        raise ValueError("simplex slice requires strictly positive coefficients")
    r = Fraction(r)
    n = len(alpha)
    if n == 1:
        return Fraction(1, alpha[0]) if r >= 0 else Fraction(0)
    if r <= 0:
        return Fraction(0)
    prod = 1
    for a in alpha:
        prod *= a
    return r ** (n - 1) / Fraction(factorial(n - 1) * prod)


def V_alpha(alpha, box: str, level, H: int | None = None) -> Fraction:
    """Exact V_α(B; level) = gcd(α)·Vol_{n−1}(B ∩ {α·ν = level}) / ‖α‖.

    ``box`` is one of "unit" ([0,1]^n), "half" ([−1/2,1/2]^n),
    "scaled-positive" ([0,H]^n) or "scaled-symmetric" ([−H,H]^n); the scaled
    boxes require ``H`` and an exact rational ``level``.  Zero coordinates of
    α are allowed and reduced away.
    """
    a = tuple(int(x) for x in alpha)
    if not a or all(x == 0 for x in a):
        raise ValueError("alpha must be a nonzero vector")
    if box not in BOXES:
        raise ValueError(f"unknown box kind {box!r}")
    nz = tuple(x for x in a if x != 0)
    g = arith.gcd_vec(a)
    r = Fraction(level)
    n = len(a)
    if box == "unit":
        return g * mm_unit_cube_Q(nz, r)
    if box == "half":
        return g * mm_half_cube_Q(nz, r)
    if H is None or H < 1:
        raise ValueError("scaled boxes require a positive height H")
    if box == "scaled-positive":
        return g * H ** (n - 1) * mm_unit_cube_Q(nz, r / H)
    return g * (2 * H) ** (n - 1) * mm_half_cube_Q(nz, r / (2 * H))


def V_alpha_positive(alpha, J: int, H: int) -> Fraction:
    """Closed form gcd(α)·J^{n−1} / ((n−1)!·∏ α_i) for positive α, 0 ≤ J ≤ H.

    Valid exactly in the regime 0 ≤ J ≤ H, where the simplex slice lies
    inside the box [0,H]^n.
    """
    a = tuple(int(x) for x in alpha)
    if not a or any(x <= 0 for x in a):
        raise ValueError("positive-orthant density requires strictly positive alpha")
    if not 0 <= J <= H:
        raise ValueError("positive-orthant density requires 0 <= J <= H")
    n = len(a)
    prod = 1
    for x in a:
        prod *= x
    return arith.gcd_vec(a) * Fraction(J ** (n - 1), factorial(n - 1) * prod)
