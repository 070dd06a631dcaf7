"""Building data for Z2^r covers: derived classes, validation, quotient bookkeeping.

Linear equivalence on these rational surfaces is identified with equality of
class vectors in the free Picard lattice (there is no torsion).  Geometric
hypotheses on the actual branch divisors (smoothness, transversality, how many
components pass through a point) are carried as declared flags and echoed in
every report; they are never verified from equations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import (DegenerateCoverError, NotTwoDivisibleError, StructuralError,
                     UnsupportedConfigurationError)
from .groups import (Character, GroupElement, Subgroup, coset_image,
                     nonzero_characters, pair)
from .picard import DivClass, SurfaceModel, intersect


@dataclass(frozen=True)
class BranchFlags:
    smooth: bool = True
    reduced: bool = True
    notes: str = ""


@dataclass(frozen=True)
class BranchComponent:
    sigma: GroupElement
    divisor: DivClass
    flags: BranchFlags = BranchFlags()


@dataclass(frozen=True)
class Assumptions:
    pairwise_transversal: bool = True
    max_two_through_any_point: bool = True
    special_points: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "special_points", tuple(self.special_points))


@dataclass(frozen=True)
class CoverSpec:
    """A Z2^rank cover of the surface, described by its branch assignment."""

    surface: SurfaceModel
    rank: int
    branch: tuple[BranchComponent, ...]
    assumptions: Assumptions = Assumptions()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise StructuralError("rank must be at least 1")
        comps = tuple(sorted(self.branch, key=lambda c: c.sigma.bits))
        seen = set()
        for comp in comps:
            if comp.sigma.rank != self.rank:
                raise StructuralError(
                    f"branch element {comp.sigma} does not have rank {self.rank}")
            if comp.sigma.is_zero:
                raise StructuralError("branch map must not contain the zero element")
            if comp.sigma in seen:
                raise StructuralError(f"duplicate branch element {comp.sigma}")
            seen.add(comp.sigma)
            if len(comp.divisor.e) != self.surface.blowup_count:
                raise StructuralError(
                    f"branch class for {comp.sigma} does not live on the surface")
            if comp.divisor.f < 0 or comp.divisor.g < 0:
                raise StructuralError(
                    f"branch class for {comp.sigma} has negative bidegree")
        object.__setattr__(self, "branch", comps)

    @property
    def branch_map(self) -> dict[GroupElement, BranchComponent]:
        return {comp.sigma: comp for comp in self.branch}

    def branch_class(self, sigma: GroupElement) -> DivClass:
        """Class of D_sigma; absent elements carry the zero class."""
        for comp in self.branch:
            if comp.sigma == sigma:
                return comp.divisor
        return DivClass.zero(self.surface.blowup_count)

    @cached_property
    def derived_L(self) -> dict[Character, DivClass]:
        return derive_L(self)


def _parity(d: DivClass) -> DivClass:
    return DivClass(d.f % 2, d.g % 2, tuple(c % 2 for c in d.e))


def _halved(d: DivClass) -> Optional[DivClass]:
    if not _parity(d).is_zero:
        return None
    return DivClass(d.f // 2, d.g // 2, tuple(c // 2 for c in d.e))


def _branch_sum(spec: CoverSpec, chi: Character) -> DivClass:
    total = DivClass.zero(spec.surface.blowup_count)
    for comp in spec.branch:
        if pair(chi, comp.sigma) == -1:
            total = total + comp.divisor
    return total


def derive_L(spec: CoverSpec) -> dict[Character, DivClass]:
    """Solve 2*L_chi = sum of the branch classes on which chi is -1, per character.

    Raises NotTwoDivisibleError when the sum has an odd coefficient and
    DegenerateCoverError when some nontrivial character would get the zero
    class; either way the branch data does not define a cover.
    """
    out: dict[Character, DivClass] = {}
    for chi in nonzero_characters(spec.rank):
        total = _branch_sum(spec, chi)
        half = _halved(total)
        if half is None:
            raise NotTwoDivisibleError(
                f"branch sum {total} for character {chi} is not 2-divisible")
        if half.is_zero:
            raise DegenerateCoverError(
                f"character {chi} receives the zero class; the data is degenerate")
        out[chi] = half
    return out


@dataclass(frozen=True)
class RelationCheck:
    character: Character
    branch_sum: DivClass
    halved: Optional[DivClass]
    residual: DivClass
    divisible: bool
    nontrivial: bool

    @property
    def passed(self) -> bool:
        return self.divisible and self.nontrivial

    def to_json(self) -> dict:
        return {
            "character": list(self.character.bits),
            "branch_sum": self.branch_sum.to_json(),
            "halved": None if self.halved is None else self.halved.to_json(),
            "residual": self.residual.to_json(),
            "divisible": self.divisible,
            "nontrivial": self.nontrivial,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ValidationReport:
    rank: int
    relations: tuple[RelationCheck, ...]
    branch_reduced: bool
    assumptions: Assumptions
    warnings: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.relations)

    @property
    def failing_characters(self) -> tuple[Character, ...]:
        return tuple(r.character for r in self.relations if not r.passed)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "relations": [r.to_json() for r in self.relations],
            "branch_reduced": self.branch_reduced,
            "assumptions": {
                "pairwise_transversal": self.assumptions.pairwise_transversal,
                "max_two_through_any_point": self.assumptions.max_two_through_any_point,
                "special_points": list(self.assumptions.special_points),
            },
            "warnings": list(self.warnings),
            "all_passed": self.all_passed,
        }


def validate(spec: CoverSpec) -> ValidationReport:
    """Check every character relation and echo the unverifiable hypotheses.

    Report-style: never raises on bad relations, it records them.  The
    divisibility residual is the coefficientwise parity of the branch sum.
    """
    relations = []
    for chi in nonzero_characters(spec.rank):
        total = _branch_sum(spec, chi)
        half = _halved(total)
        relations.append(RelationCheck(
            character=chi,
            branch_sum=total,
            halved=half,
            residual=_parity(total),
            divisible=half is not None,
            nontrivial=half is not None and not half.is_zero,
        ))
    warnings = []
    for a, b in itertools.combinations(spec.branch, 2):
        if a.divisor == b.divisor:
            warnings.append(
                f"components {a.sigma} and {b.sigma} share the class {a.divisor}; "
                "they are assumed to be distinct members of the linear system")
    return ValidationReport(
        rank=spec.rank,
        relations=tuple(relations),
        branch_reduced=all(comp.flags.reduced for comp in spec.branch),
        assumptions=spec.assumptions,
        warnings=tuple(warnings),
    )


def quotient_inertia(spec: CoverSpec, gamma: Subgroup) -> dict[tuple[int, ...], tuple[GroupElement, ...]]:
    """Group branch elements by their coset in the quotient by gamma.

    Elements landing on the zero coset are dropped; keys are quotient
    coordinates in lex order.
    """
    if gamma.rank != spec.rank:
        raise StructuralError("subgroup rank does not match the cover rank")
    grouped: dict[tuple[int, ...], list[GroupElement]] = {}
    for comp in spec.branch:
        image = coset_image(gamma, comp.sigma)
        if not any(image):
            continue
        grouped.setdefault(image, []).append(comp.sigma)
    return {image: tuple(sorted(sigmas)) for image, sigmas in sorted(grouped.items())}


def quotient_nodes(spec: CoverSpec, gamma: Subgroup) -> int:
    """Nodes of the quotient surface coming from branch components with equal inertia image.

    Every base intersection point of two components sharing a nonzero image
    contributes quotient_order/2 nodes.  Only the order-4 quotient is modeled.
    """
    quotient_order = 1 << (spec.rank - gamma.dim)
    if quotient_order != 4:
        raise UnsupportedConfigurationError(
            f"node counting is modeled for quotient order 4, got {quotient_order}")
    if not spec.assumptions.pairwise_transversal:
        raise UnsupportedConfigurationError(
            "node counting needs the pairwise-transversality assumption")
    by_sigma = spec.branch_map
    total = 0
    for sigmas in quotient_inertia(spec, gamma).values():
        for s, t in itertools.combinations(sigmas, 2):
            total += intersect(spec.surface, by_sigma[s].divisor, by_sigma[t].divisor)
    return total * (quotient_order // 2)


def cover_spec_to_json(spec: CoverSpec) -> dict:
    """Serialize a cover spec; the inverse of cover_spec_from_json."""
    branch = []
    for comp in spec.branch:
        flags: dict = {"smooth": comp.flags.smooth, "reduced": comp.flags.reduced}
        if comp.flags.notes:
            flags["notes"] = comp.flags.notes
        branch.append({
            "sigma": list(comp.sigma.bits),
            "class": comp.divisor.to_json(),
            "flags": flags,
        })
    assumptions: dict = {
        "pairwise_transversal": spec.assumptions.pairwise_transversal,
        "max_two_through_any_point": spec.assumptions.max_two_through_any_point,
    }
    if spec.assumptions.special_points:
        assumptions["special_points"] = list(spec.assumptions.special_points)
    return {
        "rank": spec.rank,
        "surface": {
            "blowups": [{"label": p.label, "position": p.position}
                        for p in spec.surface.points],
        },
        "branch": branch,
        "assumptions": assumptions,
    }


def cover_spec_from_json(data: Mapping) -> CoverSpec:
    try:
        rank = int(data["rank"])
        from .picard import BlownUpPoint
        points = tuple(
            BlownUpPoint(str(entry["label"]), str(entry.get("position", "general")))
            for entry in data.get("surface", {}).get("blowups", ()))
        surface = SurfaceModel(points)
        branch = []
        for entry in data["branch"]:
            flags = entry.get("flags", {})
            branch.append(BranchComponent(
                sigma=GroupElement(tuple(int(b) for b in entry["sigma"])),
                divisor=DivClass.from_json(entry["class"]),
                flags=BranchFlags(
                    smooth=bool(flags.get("smooth", True)),
                    reduced=bool(flags.get("reduced", True)),
                    notes=str(flags.get("notes", "")),
                ),
            ))
        raw_assumptions = data.get("assumptions", {})
        assumptions = Assumptions(
            pairwise_transversal=bool(raw_assumptions.get("pairwise_transversal", True)),
            max_two_through_any_point=bool(
                raw_assumptions.get("max_two_through_any_point", True)),
            special_points=tuple(str(s) for s in raw_assumptions.get("special_points", ())),
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise StructuralError(f"malformed cover spec: {exc}") from exc
    return CoverSpec(surface=surface, rank=rank, branch=tuple(branch),
                     assumptions=assumptions)
