"""Exact integer/rational kernel for Rossby-wave triad resonance.

Every resonance verdict in this package reduces to integer identities over
Python's arbitrary-precision integers. A wavenumber n = (n1, n2) carries the
dispersion surrogate

    sigma(n) = n1 / (n1^2 + n2^2),

which equals the angular frequency up to a fixed negative multiple of the
beta parameter; since that factor scales every term of a resonance relation
identically, it never affects a verdict and is dropped throughout.

A pair (n, k) is a non-trivial resonance when n1, k1 and n1 - k1 are all
nonzero and sigma(n) - sigma(k) - sigma(n - k) = 0 exactly. Cross-multiplying
the three fractions turns that relation, for fixed n and first component x of
k, into a quartic in the second component y with integer coefficients; the
quartic is the workhorse of the fast partner search.

No floating point appears anywhere on a verdict path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple


class TrivialInteractionError(ValueError):
    """An interaction term has a zero zonal component.

    ``which`` names the offending quantity: "n1", "x" or "n1 - x".
    """

    def __init__(self, which: str):
        super().__init__(f"trivial interaction: {which} = 0")
        self.which = which


class Wavenumber(NamedTuple):
    """2D integer lattice point: zonal (n1) and meridional (n2) components."""

    n1: int
    n2: int

    def __add__(self, other) -> "Wavenumber":
        return Wavenumber(self.n1 + other[0], self.n2 + other[1])

    def __sub__(self, other) -> "Wavenumber":
        return Wavenumber(self.n1 - other[0], self.n2 - other[1])

    def __neg__(self) -> "Wavenumber":
        return Wavenumber(-self.n1, -self.n2)

    def __mul__(self, factor: int) -> "Wavenumber":
        return Wavenumber(self.n1 * factor, self.n2 * factor)

    __rmul__ = __mul__

    def norm2(self) -> int:
        """Squared Euclidean norm n1^2 + n2^2."""
        return self.n1 * self.n1 + self.n2 * self.n2

    def mirror(self) -> "Wavenumber":
        """Meridional reflection (n1, -n2)."""
        return Wavenumber(self.n1, -self.n2)


class ReducedFraction(Fraction):
    """Exact rational in lowest terms with denominator >= 1; zero is 0/1.

    Thin veneer over fractions.Fraction (which already guarantees the
    reduced-form invariants) adding the num/den field names and the
    "num/den" serialization used in output files.
    """

    __slots__ = ()

    @property
    def num(self) -> int:
        return self.numerator

    @property
    def den(self) -> int:
        return self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


class QuarticPoly(NamedTuple):
    """Integer coefficients of a4*y^4 + a3*y^3 + a2*y^2 + a1*y + a0."""

    a4: int
    a3: int
    a2: int
    a1: int
    a0: int


@dataclass(frozen=True, order=True)
class ResonantTriad:
    """Canonical zero-sum triple of wavenumbers in exact resonance.

    Invariants, enforced at construction: the members sum to (0, 0)
    componentwise, every member has a nonzero zonal component, the three
    sigma values sum to zero exactly, the members are sorted ascending, and
    of the triple and its negation the lexicographically smaller sorted
    tuple is stored.
    """

    a: Wavenumber
    b: Wavenumber
    c: Wavenumber

    def __post_init__(self):
        members = (self.a, self.b, self.c)
        if any(not isinstance(m, Wavenumber) for m in members):
            object.__setattr__(self, "a", Wavenumber(*self.a))
            object.__setattr__(self, "b", Wavenumber(*self.b))
            object.__setattr__(self, "c", Wavenumber(*self.c))
            members = (self.a, self.b, self.c)
        total = members[0] + members[1] + members[2]
        if total != (0, 0):
            raise ValueError(f"triad members must sum to zero, got {total}")
        if any(m.n1 == 0 for m in members):
            raise ValueError("triad members must have nonzero zonal components")
        if sum(Fraction(m.n1, m.norm2()) for m in members) != 0:
            raise ValueError("triad is not resonant: sigma values do not sum to zero")
        if list(members) != sorted(members):
            raise ValueError("triad members must be sorted ascending")
        negated = sorted(-m for m in members)
        if list(members) > negated:
            raise ValueError("triad must be the lexicographically smaller of itself and its negation")

    @classmethod
    def from_members(cls, p, q, r) -> "ResonantTriad":
        """Canonicalize an unordered zero-sum resonant triple."""
        members = sorted(Wavenumber(*m) for m in (p, q, r))
        negated = sorted(-m for m in members)
        return cls(*min(members, negated))

    def members(self) -> tuple[Wavenumber, Wavenumber, Wavenumber]:
        return (self.a, self.b, self.c)

    def mirrored(self) -> "ResonantTriad":
        """The meridionally reflected triad, re-canonicalized."""
        return ResonantTriad.from_members(*(m.mirror() for m in self.members()))


def _check_admissible(n1: int, x: int) -> None:
    if n1 == 0:
        raise TrivialInteractionError("n1")
    if x == 0:
        raise TrivialInteractionError("x")
    if n1 == x:
        raise TrivialInteractionError("n1 - x")


def _residual_numden(n1: int, n2: int, x: int, y: int) -> tuple[int, int]:
    """Unreduced numerator/denominator of sigma(n) - sigma(k) - sigma(n-k).

    The caller guarantees admissibility, which makes all three squared norms
    positive. The denominator is their (positive) product.
    """
    u = n1 - x
    v = n2 - y
    b = n1 * n1 + n2 * n2
    d = x * x + y * y
    f = u * u + v * v
    return n1 * d * f - x * b * f - u * b * d, b * d * f


def sigma(n) -> ReducedFraction:
    """Dispersion surrogate n1 / (n1^2 + n2^2) in lowest terms."""
    n1, n2 = n
    b = n1 * n1 + n2 * n2
    if b == 0:
        raise ValueError("sigma is undefined for the zero wavenumber")
    return ReducedFraction(n1, b)


def is_resonant(n, k) -> bool:
    """True iff sigma(n) - sigma(k) - sigma(n-k) vanishes exactly.

    Evaluated by cross-multiplication over arbitrary-precision integers.
    Raises TrivialInteractionError when n1, k1 or n1 - k1 is zero.
    """
    n1, n2 = n
    x, y = k
    _check_admissible(n1, x)
    num, _ = _residual_numden(n1, n2, x, y)
    return num == 0


def residual(n, k) -> ReducedFraction:
    """sigma(n) - sigma(k) - sigma(n-k) as an exact reduced fraction."""
    n1, n2 = n
    x, y = k
    _check_admissible(n1, x)
    num, den = _residual_numden(n1, n2, x, y)
    return ReducedFraction(num, den)


def canonical_triad(n, k) -> ResonantTriad:
    """Canonical triad {k, n-k, -n} for a resonant pair (n, k).

    The result is independent of which member / partner combination it is
    re-derived from. Raises ValueError when (n, k) is not resonant.
    """
    if not is_resonant(n, k):
        raise ValueError(f"pair n={tuple(n)}, k={tuple(k)} is not resonant")
    n = Wavenumber(*n)
    k = Wavenumber(*k)
    return ResonantTriad.from_members(k, n - k, -n)


def quartic_coeffs(n, x: int) -> QuarticPoly:
    """Integer quartic in y whose roots are the resonant partners (x, y) of n.

    The polynomial is the cross-multiplied numerator of
    sigma(n) - sigma((x, y)) - sigma(n - (x, y)) for fixed admissible x:

        a4 = n1
        a3 = -2 n2 n1
        a2 = -2 x (n1 - x) n1
        a1 =  2 n2 x (n1 (n1 - x) + n2^2)
        a0 = -n1 x (n1 - x) (x^2 - n1 x + n1^2 + 2 n2^2) - n2^4 x

    For every integer y the polynomial vanishes at y iff is_resonant(n, (x, y)).
    """
    n1, n2 = n
    _check_admissible(n1, x)
    u = n1 - x
    return QuarticPoly(
        n1,
        -2 * n2 * n1,
        -2 * x * u * n1,
        2 * n2 * x * (n1 * u + n2 * n2),
        -n1 * x * u * (x * x - n1 * x + n1 * n1 + 2 * n2 * n2) - n2**4 * x,
    )


def _poly_eval(coeffs: Iterable[int], t: int) -> int:
    """Horner evaluation; coeffs ordered highest degree first."""
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _derivative(coeffs: list[int]) -> list[int]:
    d = len(coeffs) - 1
    return [c * (d - i) for i, c in enumerate(coeffs[:-1])]


def _root_floors(coeffs: list[int], lo: int, hi: int) -> list[int]:
    """Marker floors covering every real root of an integer polynomial.

    Returns a sorted superset of { floor(r) : r real root of poly, lo <= r <= hi },
    clipped to [lo, hi], computed in exact integer arithmetic. The markers of
    the derivative are carried into the result, which is what makes the cover
    complete: a root either produces a strict sign change between consecutive
    checkpoints (found by binary search, valid because segments wider than one
    unit contain no derivative root and are therefore monotone), lands exactly
    on a checkpoint, or shares its unit cell with a derivative root (even
    multiplicity directly; two roots in one cell or a root next to a root
    endpoint via Rolle) and is covered by the inherited marker.
    """
    if lo > hi:
        return []
    if len(coeffs) == 2:
        c1, c0 = coeffs
        f = (-c0) // c1
        return [f] if lo <= f <= hi else []

    inherited = _root_floors(_derivative(coeffs), lo, hi)
    checkpoints = {lo, hi}
    for f in inherited:
        checkpoints.add(f)
        if f + 1 <= hi:
            checkpoints.add(f + 1)
    points = sorted(checkpoints)
    values = [_poly_eval(coeffs, p) for p in points]

    out = set(inherited)
    for i, (p, vp) in enumerate(zip(points, values)):
        if vp == 0:
            out.add(p)
        if i + 1 == len(points):
            break
        q, vq = points[i + 1], values[i + 1]
        if vp * vq < 0:
            a, b, va = p, q, vp
            exact = None
            while b - a > 1:
                mid = (a + b) // 2
                vm = _poly_eval(coeffs, mid)
                if vm == 0:
                    exact = mid
                    break
                if (vm > 0) == (va > 0):
                    a, va = mid, vm
                else:
                    b = mid
            out.add(exact if exact is not None else a)
    return sorted(out)


def integer_roots(p: QuarticPoly, bound: int) -> list[int]:
    """All integers y with |y| <= bound and p(y) = 0, sorted ascending.

    Exactness is unconditional: candidate locations come from exact
    sign-change isolation (see _root_floors) and every candidate is
    confirmed by exact evaluation. Degenerate leading coefficients are
    tolerated; the identically-zero polynomial is rejected.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    coeffs = [p.a4, p.a3, p.a2, p.a1, p.a0]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        raise ValueError("the zero polynomial vanishes at every integer")
    if len(coeffs) == 1:
        return []
    cauchy = 1 + max(abs(c) for c in coeffs[1:]) // abs(coeffs[0])
    lo = max(-bound, -cauchy)
    hi = min(bound, cauchy)
    if lo > hi:
        return []
    return [m for m in _root_floors(coeffs, lo, hi) if _poly_eval(coeffs, m) == 0]
