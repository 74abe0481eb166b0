"""Exact main-term constants for dependent-vector counts on hyperplanes.

The count of multiplicatively dependent vectors on α·ν = J in [−H,H]^n grows
like C·H^e with an exact rational C and an exponent e depending on k, the
number of nonzero entries of α.  The rank-0 and rank-1 populations give

    C⁰ = 2^{n−2} Σ_i [δ_{α*_i}(J−α_i) + δ_{α*_i}(J+α_i)] · V_{α*_i}(half box; 0)
    C¹ = 2^{n−2} Σ_{i1<i2} [δ_{α⁻}(J)·V_{α⁻}(half box; 0) + δ_{α⁺}(J)·V_{α⁺}(half box; 0)]

where α*_i drops coordinate i, α∓ drops i1, i2 and appends α_{i1} ∓ α_{i2},
δ_β(J) = 1 iff gcd(β) | J, and V is the slice density from ``slicevol``.
Smaller k needs corrections: k = 3 adds a rank-2 family and removes forced
rank-0 collisions; k = 2 adds the finite set of dependent pairs on the line
(S'₂) and removes a double count; k = 1 is affine in ⌊log H / log f(|J|)⌋
with f the minimal power base; k = 0 is the unconstrained box law
2^{n−1}·n·(n+1) on H^{n−1}.

Positive-orthant variants drop the sign factors and use unit-cube densities;
with all coefficients positive they collapse to closed forms on J^{n−2}.

All arithmetic is exact; floors of log ratios are found by repeated integer
multiplication, never with floating logs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith, slicevol
from .errors import RegimeError


@dataclass(frozen=True)
class ConstantBreakdown:
    """Rank-resolved constant: total = c0 + c1 + c2, every part ≥ 0.

    ``c1_correction`` records the adjustment already folded into c1 (it may
    be negative); ``h_exponent`` is the power of the growth variable the
    total multiplies, and ``regime`` names the validity regime, including
    which variable grows (H, or J for the all-positive case).
    """

    k: int
    c0: Fraction
    c1: Fraction
    c2: Fraction
    total: Fraction
    h_exponent: int
    regime: str
    c1_correction: Fraction = Fraction(0)

    def __post_init__(self):
        assert self.c0 >= 0 and self.c1 >= 0 and self.c2 >= 0
        assert self.total == self.c0 + self.c1 + self.c2


def alpha_star(alpha, i: int) -> tuple[int, ...]:
    """Remove the i-th coordinate (1-based)."""
    a = tuple(int(x) for x in alpha)
    if not 1 <= i <= len(a):
        raise ValueError("index out of range")
    return a[: i - 1] + a[i:]


def alpha_pm(alpha, i1: int, i2: int, sign: str) -> tuple[int, ...]:
    """Remove coordinates i1 < i2 (1-based), append α_{i1} ∓ α_{i2}."""
    a = tuple(int(x) for x in alpha)
    if not 1 <= i1 < i2 <= len(a):
        raise ValueError("indices must satisfy 1 <= i1 < i2 <= n")
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    tail = a[i1 - 1] + a[i2 - 1] if sign == "plus" else a[i1 - 1] - a[i2 - 1]
    rest = tuple(x for j, x in enumerate(a, start=1) if j not in (i1, i2))
    return rest + (tail,)


def delta(alpha, J: int) -> int:
    """1 iff gcd(α) divides J (gcd 0 divides only 0)."""
    g = arith.gcd_vec(alpha)
    if g == 0:
        return 1 if J == 0 else 0
    return 1 if J % g == 0 else 0


def _V_half(beta) -> Fraction:
    return slicevol.V_alpha(beta, "half", 0)


def _V_unit(beta) -> Fraction:
    return slicevol.V_alpha(beta, "unit", 0)


def C0(alpha, J: int) -> Fraction:
    """Rank-0 constant: families with one coordinate pinned to ±1."""
    a = tuple(int(x) for x in alpha)
    n = len(a)
    if n < 2:
        raise RegimeError("C0 requires dimension n >= 2")
    total = Fraction(0)
    for i in range(1, n + 1):
        star = alpha_star(a, i)
        d = delta(star, J - a[i - 1]) + delta(star, J + a[i - 1])
        if d:
            if all(x == 0 for x in star):
                raise RegimeError("C0 needs a second nonzero coefficient (k >= 2)")
            total += d * _V_half(star)
    return Fraction(2) ** (n - 2) * total


def C1(alpha, J: int) -> Fraction:
    """Rank-1 constant: families with a coordinate pair ν_{i1} = ±ν_{i2}."""
    a = tuple(int(x) for x in alpha)
    n = len(a)
    if n < 2:
        raise RegimeError("C1 requires dimension n >= 2")
    total = Fraction(0)
    for i1 in range(1, n + 1):
        for i2 in range(i1 + 1, n + 1):
            for sign in ("minus", "plus"):
                beta = alpha_pm(a, i1, i2, sign)
                if delta(beta, J):
                    if all(x == 0 for x in beta):
                        raise RegimeError("C1 with J = 0 needs a third nonzero coefficient")
                    total += _V_half(beta)
    return Fraction(2) ** (n - 2) * total


def _nonzero_indices(alpha) -> list[int]:
    return [i for i, x in enumerate(alpha) if x != 0]


def _is_rational_power(u: int, v: int) -> bool:
    """u**s = v**t for some positive integers s, t (u, v > 1)."""
    return arith.f_base(u) == arith.f_base(v)


def C2_k3(alpha, J: int) -> Fraction:
    """Rank-2 constant for k = 3: lines forced by α_j ν_j = J.

    Sums |α_{j'}/α_{j''}|^{-1} over permutations (j, j', j'') of the three
    nonzero indices where |J/α_j| is an integer > 1 and |α_{j'}/α_{j''}| is
    an integer > 1 that is a rational power of |J/α_j|.
    """
    a = tuple(int(x) for x in alpha)
    nz = _nonzero_indices(a)
    if len(nz) != 3:
        raise RegimeError("C2_k3 requires exactly three nonzero coefficients")
    if J == 0:
        raise RegimeError("C2_k3 requires J != 0")
    n = len(a)
    total = Fraction(0)
    for j in nz:
        if abs(J) % abs(a[j]) != 0:
            continue
        x = abs(J) // abs(a[j])
        if x <= 1:
            continue
        others = [i for i in nz if i != j]
        for jp, jpp in (others, others[::-1]):
            if abs(a[jp]) % abs(a[jpp]) != 0:
                continue
            y = abs(a[jp]) // abs(a[jpp])
            if y <= 1:
                continue
            if _is_rational_power(y, x):
                total += Fraction(1, y)
    return Fraction(2) ** (n - 2) * total


def C1_k3(alpha, J: int) -> Fraction:
    """Rank-1 constant for k = 3: C1 minus the pairs forced to rank 0.

    Removes 2^{n−2} per index j with |α_j| = |J| and the other two nonzero
    entries of equal absolute value (the pinned coordinate is then ±1).
    """
    a = tuple(int(x) for x in alpha)
    nz = _nonzero_indices(a)
    if len(nz) != 3:
        raise RegimeError("C1_k3 requires exactly three nonzero coefficients")
    if J == 0:
        raise RegimeError("C1_k3 requires J != 0")
    x_size = 0
    for j in nz:
        jp, jpp = (i for i in nz if i != j)
        if abs(a[j]) == abs(J) and abs(a[jp]) == abs(a[jpp]):
            x_size += 1
    assert x_size in (0, 1, 3)
    n = len(a)
    out = C1(a, J) - Fraction(2) ** (n - 2) * x_size
    assert out >= 0
    return out


def S2prime(J: int, a1: int, a2: int) -> list[tuple[int, int]]:
    """All pairs (x, y) with a1·x + a2·y = J, |x|,|y| > 1, |x| ≠ |y|, and
    (x, y) multiplicatively dependent.  The set is finite: such a pair has
    |x| = w^s, |y| = w^t for a common base w ≥ 2, and w^{min(s,t)} | J.

    Enumerates every w | J, every w^m | J, both roles of the minimal-exponent
    coordinate and both signs, solving the other coordinate and keeping it
    when it is ± a power of w.  Returned sorted for determinism.
    """
    if J == 0 or a1 == 0 or a2 == 0:
        raise ValueError("S2prime requires nonzero J, a1, a2")

    def power_of(m: int, w: int) -> bool:
        while m % w == 0:
            m //= w
        return m == 1

    found: set[tuple[int, int]] = set()
    aJ = abs(J)
    for w in range(2, aJ + 1):
        if aJ % w != 0:
            continue
        pw = w
        while aJ % pw == 0:
            for s in (1, -1):
                for role_x in (True, False):
                    fixed = s * pw
                    if role_x:
                        num = J - a1 * fixed
                        if num % a2:
                            continue
                        x, y = fixed, num // a2
                    else:
                        num = J - a2 * fixed
                        if num % a1:
                            continue
                        x, y = num // a1, fixed
                    if abs(x) <= 1 or abs(y) <= 1 or abs(x) == abs(y):
                        continue
                    other = abs(y) if role_x else abs(x)
                    if power_of(other, w):
                        found.add((x, y))
            pw *= w
    return sorted(found)


def C_k2(alpha, J: int) -> ConstantBreakdown:
    """Constant for exactly two nonzero coefficients (J ≠ 0, H → ∞).

    Both the rank-0 and rank-1 parts lose 2^{n−2} when J = ±(α_{j1} + α_{j2})
    or ±(α_{j1} − α_{j2}); the rank-1 part gains 2^{n−2} per pair in S'₂.
    """
    a = tuple(int(x) for x in alpha)
    nz = _nonzero_indices(a)
    if len(nz) != 2:
        raise RegimeError("C_k2 requires exactly two nonzero coefficients")
    if J == 0:
        raise RegimeError("C_k2 requires J != 0")
    n = len(a)
    a1, a2 = a[nz[0]], a[nz[1]]
    unit = Fraction(2) ** (n - 2)
    boundary = J in (a1 + a2, -(a1 + a2), a1 - a2, -(a1 - a2))
    s2 = len(S2prime(J, a1, a2))
    c0 = C0(a, J) - (unit if boundary else 0)
    correction = unit * s2 - (unit if boundary else 0)
    c1 = C1(a, J) + correction
    assert c0 >= 0 and c1 >= 0
    return ConstantBreakdown(
        k=2, c0=c0, c1=c1, c2=Fraction(0), total=c0 + c1,
        h_exponent=n - 2,
        regime=f"fixed J != 0, H -> infinity; {s2} dependent line pairs",
        c1_correction=correction,
    )


def floor_log(H: int, f: int) -> int:
    """⌊log H / log f⌋ via exact multiplication (largest t with f**t ≤ H)."""
    if H < 1 or f < 2:
        raise ValueError("floor_log requires H >= 1 and f >= 2")
    t = 0
    v = f
    while v <= H:
        t += 1
        v *= f
    return t


def C_e1(J: int, H: int, n: int) -> Fraction:
    """H-dependent constant for a single nonzero unit coefficient, |J| > 1:

        2^{n−2}(n−1) · (n + 2·⌊log H / log f(|J|)⌋ + 2(n−2)/(f(|J|)−1)).
    """
    if abs(J) <= 1:
        raise RegimeError("C_e1 requires |J| > 1; |J| = 1 follows the exact box law")
    if n < 3:
        raise RegimeError("C_e1 requires dimension n >= 3")
    if H < 1:
        raise ValueError("H must be >= 1")
    f = arith.f_base(abs(J))
    t = floor_log(H, f)
    return Fraction(2) ** (n - 2) * (n - 1) * (n + 2 * t + Fraction(2 * (n - 2), f - 1))


def _breakdown_e1(J: int, H: int, n: int) -> ConstantBreakdown:
    f = arith.f_base(abs(J))
    t = floor_log(H, f)
    unit = Fraction(2) ** (n - 2)
    c0 = 2 * unit * (n - 1)
    c1 = unit * (n - 1) * (n - 2 + 2 * t)
    c2 = 2 * unit * Fraction((n - 1) * (n - 2), f - 1)
    total = c0 + c1 + c2
    assert total == C_e1(J, H, n)
    return ConstantBreakdown(
        k=1, c0=c0, c1=c1, c2=c2, total=total, h_exponent=n - 2,
        regime=f"single unit coefficient, |J| > 1; affine in floor(log H/log {f}), here H = {H}",
    )


def C_total(alpha, J: int, H: int | None = None) -> ConstantBreakdown:
    """Dispatch on k = #nonzero coefficients.

    k ≥ 4: C0 + C1 on H^{n−2}.   k = 3: C0 + C1_k3 + C2_k3 (J ≠ 0).
    k = 2: line corrections (J ≠ 0).   k = 1: affine-in-log law (needs H);
    |J| = 1 follows the exact law (2H)^{n−1}.   k = 0 with J = 0: the
    unconstrained box constant 2^{n−1}·n·(n+1) on H^{n−1}.
    """
    a = tuple(int(x) for x in alpha)
    n = len(a)
    k = len(_nonzero_indices(a))
    if k == 0:
        if J != 0:
            raise RegimeError("all-zero alpha admits no solutions for J != 0 (degenerate)")
        unit = Fraction(2) ** (n - 1)
        c0 = unit * 2 * n
        c1 = unit * n * (n - 1)
        return ConstantBreakdown(
            k=0, c0=c0, c1=c1, c2=Fraction(0), total=unit * n * (n + 1),
            h_exponent=n - 1, regime="no linear constraint (box law)",
        )
    if k == 1:
        if H is None:
            raise RegimeError("k = 1 constant depends on H; pass H")
        if abs(J) == 1:
            unit = Fraction(2) ** (n - 1)
            return ConstantBreakdown(
                k=1, c0=unit, c1=Fraction(0), c2=Fraction(0), total=unit,
                h_exponent=n - 1,
                regime="single unit coefficient, |J| = 1: exact count (2H)^(n-1)",
            )
        return _breakdown_e1(J, H, n)
    if k == 2:
        return C_k2(a, J)
    if k == 3:
        c0 = C0(a, J)
        c1_plain = C1(a, J)
        c1 = C1_k3(a, J)
        c2 = C2_k3(a, J)
        return ConstantBreakdown(
            k=3, c0=c0, c1=c1, c2=c2, total=c0 + c1 + c2, h_exponent=n - 2,
            regime="three nonzero coefficients, J != 0, H >> |J|",
            c1_correction=c1 - c1_plain,
        )
    c0 = C0(a, J)
    c1 = C1(a, J)
    note = "" if k >= 5 else "; error term established for J != 0"
    return ConstantBreakdown(
        k=k, c0=c0, c1=c1, c2=Fraction(0), total=c0 + c1, h_exponent=n - 2,
        regime=f"{k} nonzero coefficients, H >> |J|" + note,
    )


def C_positive(alpha, J: int) -> ConstantBreakdown:
    """Positive-orthant constants.

    Mixed signs (≥ 2 positive and ≥ 2 negative coefficients): unit-cube
    densities on H^{n−2}.  All coefficients positive: closed forms on J^{n−2}
    (the height bound is implied by the plane, so J is the growth variable).
    Other sign patterns are unsupported regimes.
    """
    a = tuple(int(x) for x in alpha)
    n = len(a)
    if n < 3:
        raise RegimeError("positive-orthant constants require n >= 3")
    pos = sum(1 for x in a if x > 0)
    neg = sum(1 for x in a if x < 0)
    if all(x > 0 for x in a):
        fact = math.factorial(n - 2)
        c0 = Fraction(0)
        for i in range(1, n + 1):
            star = alpha_star(a, i)
            if delta(star, J - a[i - 1]):
                prod = 1
                for x in star:
                    prod *= x
                c0 += Fraction(arith.gcd_vec(star), prod)
        c0 /= fact
        c1 = Fraction(0)
        for i1 in range(1, n + 1):
            for i2 in range(i1 + 1, n + 1):
                beta = alpha_pm(a, i1, i2, "plus")
                if delta(beta, J):
                    prod = 1
                    for j, x in enumerate(a, start=1):
                        if j not in (i1, i2):
                            prod *= x
                    c1 += Fraction(arith.gcd_vec(beta), (a[i1 - 1] + a[i2 - 1]) * prod)
        c1 /= fact
        return ConstantBreakdown(
            k=n, c0=c0, c1=c1, c2=Fraction(0), total=c0 + c1, h_exponent=n - 2,
            regime="all-positive coefficients, positive orthant; growth in J (J > max alpha_i)",
        )
    if pos >= 2 and neg >= 2:
        c0 = Fraction(0)
        for i in range(1, n + 1):
            star = alpha_star(a, i)
            if delta(star, J - a[i - 1]):
                c0 += _V_unit(star)
        c1 = Fraction(0)
        for i1 in range(1, n + 1):
            for i2 in range(i1 + 1, n + 1):
                beta = alpha_pm(a, i1, i2, "plus")
                if delta(beta, J):
                    c1 += _V_unit(beta)
        return ConstantBreakdown(
            k=len(_nonzero_indices(a)), c0=c0, c1=c1, c2=Fraction(0), total=c0 + c1,
            h_exponent=n - 2,
            regime="mixed-sign coefficients (>=2 positive, >=2 negative), positive orthant, H >> |J|",
        )
    raise RegimeError(
        "positive-orthant constants support only all-positive coefficients or "
        ">=2 positive and >=2 negative coefficients"
    )
