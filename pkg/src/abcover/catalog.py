"""Constructors for the three built-in cover families and their invariant table.

Each family is a Z2^3 cover of P1xP1 (variant "main") or of its one-point
blowup (variants "var1" and "var2"), parametrized by bidegrees m, n >= 1.
The table generator re-runs the whole pipeline per cell and cross-checks the
result against the closed forms, so a passing table is a self-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .canonical import REMARK_DEGREE_FOUR, canonical_map_report
from .cover import Assumptions, BranchComponent, BranchFlags, CoverSpec, validate
from .errors import TableIntegrityError
from .groups import GroupElement
from .invariants import numerical_invariants
from .picard import DivClass, SurfaceModel, strict_transform

VARIANTS = ("main", "var1", "var2")

_SIGMA_100 = GroupElement((1, 0, 0))
_SIGMA_101 = GroupElement((1, 0, 1))
_SIGMA_110 = GroupElement((1, 1, 0))
_SIGMA_111 = GroupElement((1, 1, 1))
_SIGMA_011 = GroupElement((0, 1, 1))


@dataclass(frozen=True)
class FamilyRow:
    variant: str
    m: int
    n: int
    K2: int
    pg: int
    q: int
    image_degree: int
    base_point_free: bool

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "m": self.m,
            "n": self.n,
            "K2": self.K2,
            "pg": self.pg,
            "q": self.q,
            "image_degree": self.image_degree,
            "base_point_free": self.base_point_free,
        }


@dataclass(frozen=True)
class RemarkRow:
    variant: str
    m: int
    n: int
    remark: str

    def to_json(self) -> dict:
        return {"variant": self.variant, "m": self.m, "n": self.n,
                "remark": self.remark}


TableEntry = Union[FamilyRow, RemarkRow]


def family(variant: str, m: int, n: int) -> CoverSpec:
    """Build the cover description of one family member."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    m, n = int(m), int(n)
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be at least 1, got m={m}, n={n}")
    base = {
        _SIGMA_100: DivClass(2, 2),
        _SIGMA_101: DivClass(2, 2),
        _SIGMA_110: DivClass(2 * m, 0),
        _SIGMA_111: DivClass(0, 2 * n),
    }
    flags = BranchFlags(smooth=True, reduced=True)
    if variant == "main":
        surface = SurfaceModel.quadric()
        components = [BranchComponent(sigma, cls, flags)
                      for sigma, cls in base.items()]
        assumptions = Assumptions()
    elif variant == "var1":
        surface = SurfaceModel.with_general_points(1)
        components = [BranchComponent(sigma, strict_transform(cls, (1,)), flags)
                      for sigma, cls in base.items()]
        assumptions = Assumptions(special_points=(
            "ordinary quadruple point of the branch at P1: all four components "
            "pass through it pairwise transversally",))
    else:
        surface = SurfaceModel.with_general_points(1)
        mults = {_SIGMA_100: 2, _SIGMA_101: 1, _SIGMA_110: 1, _SIGMA_111: 0}
        components = [
            BranchComponent(
                sigma, strict_transform(cls, (mults[sigma],)),
                BranchFlags(smooth=True, reduced=True,
                            notes="node at P1 before the blowup"
                            if mults[sigma] == 2 else ""))
            for sigma, cls in base.items()
        ]
        components.append(BranchComponent(_SIGMA_011, DivClass(0, 0, (1,)), flags))
        assumptions = Assumptions(special_points=(
            "ordinary quadruple point of the branch at P1: one component has a "
            "node there and two more pass through",))
    return CoverSpec(surface=surface, rank=3, branch=tuple(components),
                     assumptions=assumptions)


def _closed_form(variant: str, m: int, n: int) -> dict:
    if variant == "main":
        return {"K2": 16 * m * n, "pg": 2 * m * n + 3, "q": 0,
                "image_degree": 8 * m * n, "base_point_free": True}
    if variant == "var1":
        return {"K2": 16 * m * n - 8, "pg": 2 * m * n + 2, "q": 0,
                "image_degree": 8 * m * n - 4, "base_point_free": True}
    return {"K2": 16 * m * n - 2, "pg": 2 * m * n + 2, "q": 0,
            "image_degree": 8 * m * n - 2, "base_point_free": False}


def _table_entry(variant: str, m: int, n: int) -> TableEntry:
    cell = f"variant={variant} m={m} n={n}"
    spec = family(variant, m, n)
    report = validate(spec)
    if not report.all_passed:
        raise TableIntegrityError(f"{cell}: building data fails validation")
    inv = numerical_invariants(spec)
    canonical = canonical_map_report(spec)

    if m == 1 or n == 1:
        if canonical.canonical_degree is not None:
            raise TableIntegrityError(
                f"{cell}: degree certificate unexpectedly holds")
        if REMARK_DEGREE_FOUR not in canonical.remarks:
            raise TableIntegrityError(f"{cell}: expected the 4:1 remark")
        return RemarkRow(variant, m, n, REMARK_DEGREE_FOUR)

    if canonical.canonical_degree != 2:
        raise TableIntegrityError(
            f"{cell}: canonical degree {canonical.canonical_degree_text}, expected 2")
    if canonical.base_points is None or canonical.image_degree is None:
        raise TableIntegrityError(f"{cell}: base points or image degree undetermined")
    row = FamilyRow(variant=variant, m=m, n=n, K2=inv.k_squared, pg=inv.p_g,
                    q=inv.q, image_degree=canonical.image_degree,
                    base_point_free=canonical.base_points == 0)
    expected = _closed_form(variant, m, n)
    for field_name, want in expected.items():
        got = getattr(row, field_name)
        if got != want:
            raise TableIntegrityError(
                f"{cell}: {field_name} pipeline={got} closed-form={want}")
    return row


def theorem_table(m_values: Iterable[int], n_values: Iterable[int]) -> list[TableEntry]:
    """Run the full pipeline over a grid and return the verified rows.

    Parameters with m = 1 or n = 1 produce remark entries instead of rows.
    Any disagreement between the pipeline and the closed forms raises
    TableIntegrityError naming the cell.
    """
    ms = sorted({int(v) for v in m_values})
    ns = sorted({int(v) for v in n_values})
    if not ms or not ns:
        raise ValueError("table ranges must be nonempty")
    if ms[0] < 1 or ns[0] < 1:
        raise ValueError("table parameters must be at least 1")
    return [_table_entry(variant, m, n)
            for variant in VARIANTS for m in ms for n in ns]
