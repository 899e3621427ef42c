"""Exhaustive generation: counts, order invariance, generator distrust."""

import pytest

from facetkit import (
    PSEUDOMANIFOLD,
    WEAK_PM,
    canonical_form,
    enumerate_complexes,
    enumerate_weak_pseudomanifolds,
    standard_sphere,
    verify_acyclic_implies_collapsible,
)


def test_small_counts():
    assert enumerate_complexes(1).class_count == 1
    assert enumerate_complexes(2).class_count == 2
    # 3 vertices: 4 graphs (0..3 edges, all vertices present) + the full triangle
    assert enumerate_complexes(3).class_count == 5


def test_cumulative_counts_match_monotone_function_catalogue():
    # classes on <= n vertices = inequivalent nonconstant monotone Boolean
    # functions of n variables: 28 at n=4, 208 at n=5
    totals = [enumerate_complexes(m).class_count for m in range(1, 6)]
    assert sum(totals[:4]) == 28
    assert sum(totals) == 208


def test_order_invariance():
    for n in (3, 4):
        down = enumerate_complexes(n, candidate_order="size-desc")
        up = enumerate_complexes(n, candidate_order="size-asc")
        assert down.classes == up.classes


def test_unfiltered_cap():
    with pytest.raises(ValueError):
        enumerate_complexes(6)
    with pytest.raises(ValueError):
        enumerate_complexes(7, filter_=lambda c: True)


def test_filter_applies():
    pure_2d = enumerate_complexes(4, filter_=lambda c: c.dim == 2 and c.is_pure())
    assert all(k.dim == 2 for k in pure_2d.class_complexes())
    assert pure_2d.class_count < enumerate_complexes(4).class_count


def test_wpm_4_2_unique():
    report = enumerate_weak_pseudomanifolds(4, 2)
    assert report.class_count == 1
    assert report.classes[0] == canonical_form(standard_sphere(2))


def test_wpm_5_2_unique_join():
    report = enumerate_weak_pseudomanifolds(5, 2)
    assert report.class_count == 1
    join = standard_sphere(1).join(standard_sphere(0, labels=[3, 4]))
    assert report.classes[0] == canonical_form(join)


def test_wpm_5_3_is_minimal_sphere():
    report = enumerate_weak_pseudomanifolds(5, 3)
    assert report.class_count == 1
    assert report.classes[0] == canonical_form(standard_sphere(3))


def test_wpm_6_2_vertex_non_edge_bound():
    report = enumerate_weak_pseudomanifolds(6, 2)
    assert report.class_count == 3
    for complex_ in report.class_complexes():
        assert complex_.classify_pseudomanifold() in (WEAK_PM, PSEUDOMANIFOLD)
        for v in complex_.vertices:
            non_edges = sum(
                1
                for u in complex_.vertices
                if u != v and not complex_.has_face_mask((1 << u) | (1 << v))
            )
            assert non_edges <= 2


def test_wpm_guard():
    with pytest.raises(ValueError):
        enumerate_weak_pseudomanifolds(9, 2)


def test_acyclic_implies_collapsible_small():
    for n in (3, 4):
        report = verify_acyclic_implies_collapsible(n)
        assert report.holds
        assert report.acyclic_classes == report.collapsible_classes
    with pytest.raises(ValueError):
        verify_acyclic_implies_collapsible(6)


def test_acyclic_classes_have_euler_one():
    from facetkit import is_acyclic

    for m in (1, 2, 3, 4):
        for complex_ in enumerate_complexes(m).class_complexes():
            if is_acyclic(complex_):
                assert complex_.face_profile().euler == 1


def test_report_write_dir(tmp_path):
    import json

    report = enumerate_weak_pseudomanifolds(5, 2)
    report.write_dir(tmp_path / "out")
    summary = json.loads((tmp_path / "out" / "report.json").read_text())
    assert summary["class_count"] == 1
    assert (tmp_path / "out" / "class_000.cplx").exists()
