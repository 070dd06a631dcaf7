"""Canonical-system analysis: character eigenspaces, quotient structure, map degree.

The degree certificate is sufficient-condition only.  When it fails the
reported degree is a lower bound, never a negative claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cover import CoverSpec, quotient_inertia
from .errors import (InternalConsistencyError, StructuralError,
                     UnsupportedConfigurationError)
from .groups import Character, Subgroup, annihilator, pair, perp
from .invariants import bicanonical_class
from .picard import DivClass, canonical_class, h0, pairing

REMARK_DEGREE_FOUR = (
    "only two nonzero eigenspaces on the quotient canonical space: expected "
    "behaviour is a 4:1 canonical map onto a rational ruled surface; the "
    "degree-2 certificate is withheld")
REMARK_ONE_BLOWUP_AMPLENESS = (
    "one-blowup very-ampleness test: bidegree at least (1,1) and exceptional "
    "coefficient -1 (sufficient condition; the blown-up point is assumed general)")


@dataclass(frozen=True)
class BirationalityCertificate:
    holds: bool
    reasons: tuple[str, ...]

    def to_json(self) -> dict:
        return {"holds": self.holds, "reasons": list(self.reasons)}


@dataclass(frozen=True)
class CanonicalReport:
    eigen_dims: dict[Character, int]
    gamma_triv: Subgroup
    quotient_eigen_dims: dict[Character, int]
    degree_factor: int
    birational_certificate: BirationalityCertificate
    canonical_degree: Optional[int]
    base_points: Optional[int]
    image_degree: Optional[int]
    remarks: tuple[str, ...]

    @property
    def canonical_degree_text(self) -> str:
        if self.canonical_degree is not None:
            return str(self.canonical_degree)
        return f">= {self.degree_factor} (uncertified)"

    def to_json(self) -> dict:
        doc: dict = {
            "eigen_dims": [{"character": list(c.bits), "dim": v}
                           for c, v in sorted(self.eigen_dims.items())],
            "gamma_triv": {
                "rank": self.gamma_triv.rank,
                "basis": [list(b.bits) for b in self.gamma_triv.basis],
                "order": self.gamma_triv.order,
            },
            "quotient_eigen_dims": [{"character": list(c.bits), "dim": v}
                                    for c, v in sorted(self.quotient_eigen_dims.items())],
            "degree_factor": self.degree_factor,
            "birational_certificate": self.birational_certificate.to_json(),
            "canonical_degree": (self.canonical_degree
                                 if self.canonical_degree is not None
                                 else self.canonical_degree_text),
            "base_points": self.base_points,
            "remarks": list(self.remarks),
        }
        if self.image_degree is not None:
            doc["image_degree"] = self.image_degree
        return doc


def eigenspace_dims(spec: CoverSpec) -> dict[Character, int]:
    """Dimension of the canonical eigenspace of every character, in lex order."""
    k_y = canonical_class(spec.surface)
    derived = spec.derived_L
    zero_char = Character((0,) * spec.rank)
    dims: dict[Character, int] = {zero_char: h0(spec.surface, k_y)}
    for chi, l_class in derived.items():
        dims[chi] = h0(spec.surface, l_class + k_y)
    return dims


def trivial_subgroup(spec: CoverSpec) -> Subgroup:
    """Largest subgroup acting trivially on the canonical space."""
    support = [chi for chi, dim in eigenspace_dims(spec).items() if dim > 0]
    return annihilator(support, rank=spec.rank)


def half_pullback_pairing(cover_degree: int, a: DivClass, b: DivClass, *,
                          a_ramified: bool = False, b_ramified: bool = False) -> int:
    """Intersection number upstairs of pullbacks, with reduced-preimage marks.

    A class marked ramified stands for half its pullback, so the pairing is
    cover_degree * s_a * s_b * (a.b) with s = 1/2 on marked classes.
    """
    if cover_degree < 1 or cover_degree & (cover_degree - 1):
        raise StructuralError(f"cover degree must be a power of two, got {cover_degree}")
    value = Fraction(cover_degree) * pairing(a, b)
    if a_ramified:
        value /= 2
    if b_ramified:
        value /= 2
    if value.denominator != 1:
        raise InternalConsistencyError(
            f"half-pullback pairing of {a} and {b} is not an integer")
    return int(value)


def pullback_h0(spec: CoverSpec, gamma: Subgroup, a: DivClass) -> int:
    """Sections of the pullback of a to the quotient cover by gamma.

    Projection formula: sum over the characters vanishing on gamma of the
    section count of a minus the character's derived class.
    """
    if gamma.rank != spec.rank:
        raise StructuralError("subgroup rank does not match the cover rank")
    derived = spec.derived_L
    zero = DivClass.zero(spec.surface.blowup_count)
    total = 0
    for chi in perp(gamma):
        l_class = zero if chi.is_zero else derived[chi]
        total += h0(spec.surface, a - l_class)
    return total


def _very_ample_certified(spec: CoverSpec, d: DivClass) -> bool:
    # Sufficient conditions only: on P1xP1 bidegree at least (1,1); on the
    # one-point blowup additionally exceptional coefficient exactly -1.
    k = spec.surface.blowup_count
    if k == 0:
        return d.f >= 1 and d.g >= 1
    if k == 1:
        return d.f >= 1 and d.g >= 1 and d.e == (-1,)
    return False


def _base_point_free_certified(spec: CoverSpec, d: DivClass) -> bool:
    k = spec.surface.blowup_count
    if k == 0:
        return d.f >= 0 and d.g >= 0
    if k == 1:
        if d.f >= 0 and d.g >= 0 and d.e == (0,):
            return True
        return d.f >= 1 and d.g >= 1 and d.e == (-1,)
    return False


def _base_point_analysis(spec: CoverSpec, gamma: Subgroup,
                         p_g: int) -> tuple[Optional[int], list[str]]:
    """Detect the one-elliptic-ramification-curve pattern on the quotient cover.

    The quotient canonical class splits as (pullback of A) + (reduced
    preimages of the branch components whose class is kept out of A).  A
    single kept component whose reduced preimage is elliptic of canonical
    degree 1, with the pulled-back subsystem a proper subspace, forces one
    simple base point on the quotient and two upstairs.  A fully 2-divisible
    branch sum makes the canonical system a pullback system: no base points.
    Anything else is left undetermined.
    """
    quotient_order = 1 << (spec.rank - gamma.dim)
    if quotient_order != 4:
        return None, ["base points undetermined: quotient order is not 4"]
    k_y = canonical_class(spec.surface)
    zero = DivClass.zero(spec.surface.blowup_count)
    by_sigma = spec.branch_map
    image_sums: dict[tuple[int, ...], DivClass] = {}
    for image, sigmas in quotient_inertia(spec, gamma).items():
        total = zero
        for sigma in sigmas:
            total = total + by_sigma[sigma].divisor
        image_sums[image] = total
    branch_total = zero
    for class_sum in image_sums.values():
        branch_total = branch_total + class_sum

    def halved(d: DivClass) -> Optional[DivClass]:
        if d.f % 2 or d.g % 2 or any(c % 2 for c in d.e):
            return None
        return DivClass(d.f // 2, d.g // 2, tuple(c // 2 for c in d.e))

    matches: list[tuple[tuple[int, ...], DivClass, DivClass]] = []
    for image in sorted(image_sums):
        kept = image_sums[image]
        rest_half = halved(branch_total - kept)
        if rest_half is None:
            continue
        adjoint = k_y + rest_half
        kept_self = half_pullback_pairing(4, kept, kept,
                                          a_ramified=True, b_ramified=True)
        canonical_on_kept = half_pullback_pairing(4, adjoint, kept,
                                                  b_ramified=True) + kept_self
        genus = 1 + Fraction(kept_self + canonical_on_kept, 2)
        if (genus == 1 and canonical_on_kept == 1
                and pullback_h0(spec, gamma, adjoint) < p_g):
            matches.append((image, kept, adjoint))

    if len(matches) == 1:
        image, kept, adjoint = matches[0]
        return 2, [
            f"branch class {kept} at inertia image {list(image)}: reduced preimage "
            f"is elliptic with canonical degree 1, and the pulled-back system "
            f"h0 = {pullback_h0(spec, gamma, adjoint)} < {p_g} leaves it outside "
            "the fixed part: one simple base point on the quotient, two upstairs"]
    total_half = halved(branch_total)
    if not matches and total_half is not None:
        adjoint = k_y + total_half
        if (pullback_h0(spec, gamma, adjoint) == p_g
                and _base_point_free_certified(spec, adjoint)):
            return 0, [
                f"branch sum is 2-divisible: the quotient canonical system is the "
                f"pullback of the free system {adjoint}; no base points"]
    return None, ["base points undetermined: branch pattern not recognized"]


def canonical_map_report(spec: CoverSpec) -> CanonicalReport:
    """Full canonical-map analysis of a cover.

    Produces the eigenspace table, the trivially-acting subgroup, the degree
    certificate, the base-point count and, when the degree is certified, the
    degree of the canonical image.
    """
    if spec.surface.blowup_count > 1:
        raise UnsupportedConfigurationError(
            "canonical-map analysis is modeled for at most one blowup")
    dims = eigenspace_dims(spec)
    gamma = trivial_subgroup(spec)
    quotient_chars = perp(gamma)
    quotient_dims = {chi: dims[chi] for chi in quotient_chars}
    degree_factor = gamma.order
    p_g = sum(dims.values())
    k_y = canonical_class(spec.surface)
    derived = spec.derived_L

    reasons: list[str] = []
    ample_char: Optional[Character] = None
    for chi in quotient_chars:
        if chi.is_zero or quotient_dims[chi] <= 0:
            continue
        adjoint = derived[chi] + k_y
        if _very_ample_certified(spec, adjoint):
            ample_char = chi
            reasons.append(
                f"character {chi}: adjoint class {adjoint} passes the "
                "very-ampleness test")
            break
    if ample_char is None:
        reasons.append("no character in the quotient has a very-ample adjoint class")
    if spec.surface.blowup_count == 1:
        reasons.append(REMARK_ONE_BLOWUP_AMPLENESS)
    nonzero_count = sum(1 for v in quotient_dims.values() if v > 0)
    reasons.append(
        f"{nonzero_count} nonzero canonical eigenspaces on the quotient "
        "(certificate needs at least 3)")
    holds = ample_char is not None and nonzero_count >= 3
    certificate = BirationalityCertificate(holds=holds, reasons=tuple(reasons))
    canonical_degree = degree_factor if holds else None

    remarks: list[str] = []
    if not holds and nonzero_count == 2:
        remarks.append(REMARK_DEGREE_FOUR)
    base_points, base_remarks = _base_point_analysis(spec, gamma, p_g)
    remarks.extend(base_remarks)

    w = bicanonical_class(spec)
    k_squared = ((1 << spec.rank) * pairing(w, w)) // 4
    image_degree: Optional[int] = None
    if canonical_degree is not None and base_points is not None:
        numerator = k_squared - base_points
        if numerator % canonical_degree == 0:
            image_degree = numerator // canonical_degree
        else:
            remarks.append("image degree omitted: K^2 minus base points is not "
                           "divisible by the map degree")

    return CanonicalReport(
        eigen_dims=dims,
        gamma_triv=gamma,
        quotient_eigen_dims=quotient_dims,
        degree_factor=degree_factor,
        birational_certificate=certificate,
        canonical_degree=canonical_degree,
        base_points=base_points,
        image_degree=image_degree,
        remarks=tuple(remarks),
    )
