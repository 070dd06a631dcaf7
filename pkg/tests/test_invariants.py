import pytest

from abcover import (BranchComponent, CoverSpec, DivClass, SurfaceModel,
                     bicanonical_class, canonical_class, family, intersect,
                     minimality_report, numerical_invariants)
from abcover.groups import GroupElement


def test_bicanonical_classes():
    assert bicanonical_class(family("main", 2, 2)) == DivClass(4, 4)
    assert bicanonical_class(family("main", 3, 5)) == DivClass(6, 10)
    assert bicanonical_class(family("var1", 2, 2)) == DivClass(4, 4, (-2,))
    assert bicanonical_class(family("var2", 2, 2)) == DivClass(4, 4, (-1,))
    assert bicanonical_class(family("var2", 4, 3)) == DivClass(8, 6, (-1,))


def test_numerical_invariants_worked_examples():
    inv = numerical_invariants(family("main", 2, 2))
    assert (inv.k_squared, inv.p_g, inv.chi, inv.q) == (64, 11, 12, 0)
    assert inv.minimal and inv.general_type

    inv = numerical_invariants(family("var1", 3, 2))
    assert (inv.k_squared, inv.p_g, inv.q) == (88, 14, 0)

    inv = numerical_invariants(family("var2", 2, 2))
    assert (inv.k_squared, inv.p_g, inv.q) == (62, 10, 0)


def test_closed_forms_across_the_range():
    for m in range(2, 11):
        for n in range(2, 11):
            inv = numerical_invariants(family("main", m, n))
            assert (inv.k_squared, inv.p_g, inv.q) == (16 * m * n, 2 * m * n + 3, 0)
            assert inv.chi == 2 * m * n + 4
            inv = numerical_invariants(family("var1", m, n))
            assert (inv.k_squared, inv.p_g, inv.q) == (16 * m * n - 8, 2 * m * n + 2, 0)
            inv = numerical_invariants(family("var2", m, n))
            assert (inv.k_squared, inv.p_g, inv.q) == (16 * m * n - 2, 2 * m * n + 2, 0)


def test_noether_identity_and_parity():
    for variant in ("main", "var1", "var2"):
        for m, n in [(2, 2), (3, 4), (6, 5)]:
            inv = numerical_invariants(family(variant, m, n))
            assert inv.chi == 1 - inv.q + inv.p_g
            assert inv.k_squared % 2 == 0
            w = inv.two_k_class
            spec = family(variant, m, n)
            assert inv.k_squared == 2 * intersect(spec.surface, w, w)


def test_minimality_reports():
    report = minimality_report(family("main", 2, 2))
    assert report.nef and report.big
    assert report.verdict == "minimal of general type"

    report = minimality_report(family("var2", 2, 2))
    assert report.nef and report.big
    assert report.verdict == "minimal of general type"


def test_minimality_withholds_verdict_without_bigness():
    # fiber-only direction: W = 2F has self-intersection 0
    thin = CoverSpec(
        surface=SurfaceModel.quadric(), rank=3,
        branch=(BranchComponent(GroupElement((1, 0, 0)), DivClass(2, 2)),
                BranchComponent(GroupElement((1, 0, 1)), DivClass(2, 2)),
                BranchComponent(GroupElement((1, 1, 0)), DivClass(2, 0))))
    w = bicanonical_class(thin)
    assert w == DivClass(2, 0)
    report = minimality_report(thin)
    assert report.nef and not report.big
    assert report.verdict == "undetermined"


def test_adjunction_parity_of_catalog_classes():
    # C.C + K.C is even for every class the catalog produces
    for variant in ("main", "var1", "var2"):
        spec = family(variant, 3, 2)
        k = canonical_class(spec.surface)
        classes = [comp.divisor for comp in spec.branch]
        classes += list(spec.derived_L.values())
        classes.append(bicanonical_class(spec))
        for c in classes:
            assert (intersect(spec.surface, c, c)
                    + intersect(spec.surface, k, c)) % 2 == 0
