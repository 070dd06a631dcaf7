"""Exact arithmetic in the Picard lattice of P1xP1 blown up at general points.

Divisor classes are integer vectors on the basis F (a fiber of the first
ruling), G (a fiber of the second ruling) and the exceptional classes
E1..Ek of the blown-up points.  The intersection form is F.G = 1,
F.F = G.G = 0, Ei.Ei = -1, all other products zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import StructuralError, UnsupportedConfigurationError

GENERAL_POSITION = "general"
SPECIFIED_CONFIGURATION = "specified-multiplicity-configuration"
_POSITIONS = (GENERAL_POSITION, SPECIFIED_CONFIGURATION)


@dataclass(frozen=True)
class BlownUpPoint:
    """A blown-up point together with its position assumption."""

    label: str
    position: str = GENERAL_POSITION

    def __post_init__(self) -> None:
        if self.position not in _POSITIONS:
            raise StructuralError(f"unknown position assumption {self.position!r}")


@dataclass(frozen=True)
class SurfaceModel:
    """P1xP1 blown up at the listed points."""

    points: tuple[BlownUpPoint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise StructuralError("blown-up point labels must be unique")

    @property
    def blowup_count(self) -> int:
        return len(self.points)

    @classmethod
    def quadric(cls) -> "SurfaceModel":
        """The unblown surface P1xP1."""
        return cls()

    @classmethod
    def with_general_points(cls, count: int, prefix: str = "P") -> "SurfaceModel":
        if count < 0:
            raise StructuralError("blowup count must be nonnegative")
        return cls(tuple(BlownUpPoint(f"{prefix}{i + 1}") for i in range(count)))


@dataclass(frozen=True)
class DivClass:
    """The divisor class f*F + g*G + sum_i e[i]*E_i."""

    f: int
    g: int
    e: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", int(self.f))
        object.__setattr__(self, "g", int(self.g))
        object.__setattr__(self, "e", tuple(int(c) for c in self.e))

    @classmethod
    def zero(cls, blowup_count: int = 0) -> "DivClass":
        return cls(0, 0, (0,) * blowup_count)

    @property
    def is_zero(self) -> bool:
        return self.f == 0 and self.g == 0 and not any(self.e)

    def __add__(self, other: "DivClass") -> "DivClass":
        _same_length(self, other)
        return DivClass(self.f + other.f, self.g + other.g,
                        tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        _same_length(self, other)
        return DivClass(self.f - other.f, self.g - other.g,
                        tuple(a - b for a, b in zip(self.e, other.e)))

    def __neg__(self) -> "DivClass":
        return DivClass(-self.f, -self.g, tuple(-c for c in self.e))

    def __mul__(self, scalar: int) -> "DivClass":
        return DivClass(scalar * self.f, scalar * self.g,
                        tuple(scalar * c for c in self.e))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"f": self.f, "g": self.g, "e": list(self.e)}

    @classmethod
    def from_json(cls, data: dict) -> "DivClass":
        try:
            return cls(int(data["f"]), int(data["g"]),
                       tuple(int(c) for c in data.get("e", ())))
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed divisor class: {data!r}") from exc

    def __str__(self) -> str:
        parts: list[str] = []

        def term(coeff: int, name: str) -> None:
            if coeff == 0:
                return
            sign = "-" if coeff < 0 else ("+" if parts else "")
            mag = abs(coeff)
            parts.append(f"{sign}{'' if mag == 1 else mag}{name}")

        term(self.f, "F")
        term(self.g, "G")
        for i, c in enumerate(self.e):
            term(c, "E" if len(self.e) == 1 else f"E{i + 1}")
        return "".join(parts) or "0"


def _same_length(a: DivClass, b: DivClass) -> None:
    if len(a.e) != len(b.e):
        raise StructuralError(
            f"classes live on different surfaces ({len(a.e)} vs {len(b.e)} blowups)")


def _require_on_surface(surface: SurfaceModel, d: DivClass) -> None:
    if len(d.e) != surface.blowup_count:
        raise StructuralError(
            f"class has {len(d.e)} exceptional coefficients, "
            f"surface has {surface.blowup_count} blowups")


def pairing(a: DivClass, b: DivClass) -> int:
    """Intersection number of two classes on a common surface."""
    _same_length(a, b)
    return a.f * b.g + a.g * b.f - sum(x * y for x, y in zip(a.e, b.e))


def intersect(surface: SurfaceModel, a: DivClass, b: DivClass) -> int:
    """Intersection number, with both classes checked against the surface."""
    _require_on_surface(surface, a)
    _require_on_surface(surface, b)
    return pairing(a, b)


def canonical_class(surface: SurfaceModel) -> DivClass:
    """-2F - 2G + E1 + ... + Ek."""
    return DivClass(-2, -2, (1,) * surface.blowup_count)


# Fixed interpolation points: blowup i sits at the rational point made of the
# (2i)-th and (2i+1)-th primes.  No randomness anywhere, so section counts are
# reproducible across runs.
_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def _prime(index: int) -> int:
    while index >= len(_PRIMES):
        candidate = _PRIMES[-1] + 2
        while any(candidate % p == 0 for p in _PRIMES if p * p <= candidate):
            candidate += 2
        _PRIMES.append(candidate)
    return _PRIMES[index]


def interpolation_point(index: int) -> tuple[int, int]:
    """Coordinates used for the multiplicity conditions of blowup `index`."""
    return _prime(2 * index), _prime(2 * index + 1)


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def _derivative_row(f: int, g: int, ax: int, ay: int, px: int, py: int) -> list[int]:
    # Value of d^ax/dx d^ay/dy applied to x^i y^j, evaluated at (px, py),
    # for every monomial 0 <= i <= f, 0 <= j <= g.
    row: list[int] = []
    for i in range(f + 1):
        fx = _falling(i, ax)
        for j in range(g + 1):
            if i < ax or j < ay:
                row.append(0)
            else:
                row.append(fx * _falling(j, ay) * px ** (i - ax) * py ** (j - ay))
    return row


def _rational_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    mat = [[Fraction(v) for v in row] for row in rows]
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                factor = mat[i][col] / prow[col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def h0(surface: SurfaceModel, d: DivClass) -> int:
    """Dimension of the space of global sections of the class d.

    Exceptional classes with nonnegative coefficient are fixed components and
    are stripped first.  What remains is the space of bidegree (f, g)
    polynomials vanishing to order -e[i] at the i-th blown-up point.  The
    vanishing conditions are evaluated at the fixed interpolation points and
    the dimension drop is the exact rank of the condition matrix over Q.
    """
    _require_on_surface(surface, d)
    if any(p.position != GENERAL_POSITION for p in surface.points):
        raise UnsupportedConfigurationError(
            "section counts are only modeled for general blown-up points")
    if d.f < 0 or d.g < 0:
        return 0
    mults = [max(0, -c) for c in d.e]
    rows: list[list[int]] = []
    for i, mult in enumerate(mults):
        if mult == 0:
            continue
        px, py = interpolation_point(i)
        for ax in range(mult):
            for ay in range(mult - ax):
                rows.append(_derivative_row(d.f, d.g, ax, ay, px, py))
    return (d.f + 1) * (d.g + 1) - _rational_rank(rows)


@dataclass(frozen=True)
class NefCheck:
    """Outcome of the finite-test-curve nef check."""

    nef: bool
    witness: Optional[DivClass] = None
    witness_pairing: Optional[int] = None

    def __bool__(self) -> bool:
        return self.nef


def _test_curves(surface: SurfaceModel) -> tuple[DivClass, ...]:
    if surface.blowup_count == 0:
        return (DivClass(1, 0), DivClass(0, 1))
    return (DivClass(1, 0, (-1,)), DivClass(0, 1, (-1,)), DivClass(0, 0, (1,)),
            DivClass(1, 0, (0,)), DivClass(0, 1, (0,)))


def is_nef(surface: SurfaceModel, d: DivClass) -> NefCheck:
    """Check d against the known generators of the curve cone (k <= 1 only)."""
    if surface.blowup_count > 1:
        raise UnsupportedConfigurationError(
            "nef testing is modeled for at most one blowup")
    _require_on_surface(surface, d)
    for curve in _test_curves(surface):
        value = pairing(d, curve)
        if value < 0:
            return NefCheck(False, curve, value)
    return NefCheck(True)


def adjunction_genus(surface: SurfaceModel, c: DivClass) -> Fraction:
    """1 + (C.C + K.C)/2; a non-integer flags a class no reduced irreducible curve has."""
    k = canonical_class(surface)
    return 1 + Fraction(intersect(surface, c, c) + intersect(surface, k, c), 2)


def strict_transform(d: DivClass, mults: Sequence[int]) -> DivClass:
    """Transform a class on P1xP1 through blowups with the given multiplicities."""
    if d.e:
        raise StructuralError("strict transform starts from a class on P1xP1")
    mults = tuple(int(m) for m in mults)
    if any(m < 0 for m in mults):
        raise StructuralError("multiplicities must be nonnegative")
    return DivClass(d.f, d.g, tuple(-m for m in mults))
