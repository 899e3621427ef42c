"""Named constructors and their build-time verification."""

import pytest

from facetkit import (
    PSEUDOMANIFOLD,
    canonical_form,
    cycle,
    cyclic_complementary_complex,
    is_circle,
    is_isomorphic,
    kuehnel_complex,
    projective_plane_6,
    standard_sphere,
)
from facetkit.atlas import DATA_DIR_ENV


def test_standard_sphere_small():
    s0 = standard_sphere(0)
    assert s0.facets == ((0,), (1,))
    s2 = standard_sphere(2)
    assert s2.face_profile().counts == (4, 6, 4)
    s3 = standard_sphere(3)
    assert len(s3.facet_masks) == 5
    from facetkit import free_faces

    assert free_faces(s3) == []


def test_standard_sphere_labels():
    s = standard_sphere(1, labels=[7, 8, 9])
    assert s.vertices == (7, 8, 9)
    with pytest.raises(ValueError):
        standard_sphere(2, labels=[1, 2, 3])


def test_sphere_joins_are_spheres():
    # the join of minimal spheres is a combinatorial (a+b+1)-sphere, but on
    # a+b+4 vertices, so the check is homological plus classification
    from facetkit import homology

    for a, b in [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (0, 3)]:
        lhs = standard_sphere(a)
        rhs = standard_sphere(b, labels=range(10, 12 + b))
        joined = lhs.join(rhs)
        d = a + b + 1
        assert joined.classify_pseudomanifold() == PSEUDOMANIFOLD
        profile = homology(joined)
        assert all(
            (profile.rank(k), profile.torsion(k)) == ((1, ()) if k == d else (0, ()))
            for k in range(d + 1)
        )
    # in the one case where vertex counts agree the join is the 4-cycle
    square = standard_sphere(0).join(standard_sphere(0, labels=[2, 3]))
    assert canonical_form(square) == canonical_form(cycle(4))


def test_cycle():
    assert canonical_form(cycle(3)) == canonical_form(standard_sphere(1))
    nine = cycle(9)
    assert nine.face_profile().counts == (9, 9)
    with pytest.raises(ValueError):
        cycle(2)


def test_kuehnel_3():
    k = kuehnel_complex(3)
    assert k.n_vertices == 9
    assert len(k.facet_masks) == 27
    assert k.is_k_neighbourly(2)
    assert k.face_profile().euler == 0
    # vertex links are 2-spheres: closed pseudomanifolds whose vertex links are circles
    for v in k.vertices:
        link = k.link([v])
        assert link.classify_pseudomanifold() == PSEUDOMANIFOLD
        assert all(is_circle(link.link([u])) for u in link.vertices)


def test_kuehnel_2():
    k = kuehnel_complex(2)
    assert k.n_vertices == 7
    assert len(k.facet_masks) == 14
    assert all(is_circle(k.link([v])) for v in k.vertices)
    with pytest.raises(ValueError):
        kuehnel_complex(1)


def test_cyclic_complementary_relabeled():
    k = cyclic_complementary_complex(labels=range(10, 17))
    assert k.vertices == tuple(range(10, 17))
    assert is_isomorphic(k, cyclic_complementary_complex()) is not None


def test_projective_plane_loads_and_validates():
    rp = projective_plane_6()
    assert rp.face_profile().counts == (6, 15, 10)
    assert rp.n_vertices == 6
    assert is_isomorphic(rp, projective_plane_6(labels=range(20, 26))) is not None


def test_projective_plane_checksum_guard(tmp_path, monkeypatch):
    from facetkit.atlas import _data_path

    good = _data_path("rp2_6.cplx")
    tampered = tmp_path / "rp2_6.cplx"
    text = good.read_text().replace("0 1 2\n", "0 1 3\n", 1)
    tampered.write_text(text)
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    with pytest.raises(ValueError, match="checksum"):
        projective_plane_6()


def test_projective_plane_missing_file(tmp_path, monkeypatch):
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    with pytest.raises(FileNotFoundError):
        projective_plane_6()
