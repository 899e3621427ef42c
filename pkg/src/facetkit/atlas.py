"""Constructors for the named complexes the library works with.

Every builder re-verifies its defining properties on each call; the checks
are the mathematical characterizations, not regression snapshots.  Default
labels are consecutive integers from 0, and every constructor accepts a
label injection so outputs can be joined without relabeling.
"""

from __future__ import annotations

import os
from itertools import combinations
from math import comb
from pathlib import Path

from .complexes import PSEUDOMANIFOLD, WEAK_PM_WITH_BOUNDARY, Complex, build
from .complementarity import cofacet_histogram, intersection_profile, is_complementary
from .formats import facet_body_checksum, load_complex
from .homology import homology

DATA_DIR_ENV = "FACETKIT_DATA_DIR"


def _labels(labels, count: int, what: str) -> list[int]:
    if labels is None:
        return list(range(count))
    out = sorted(set(labels))
    if len(out) != count:
        raise ValueError(f"{what} needs exactly {count} distinct labels, got {len(out)}")
    return out


def standard_sphere(d: int, labels=None) -> Complex:
    """All proper nonempty subsets of a (d+2)-set: the minimal d-sphere."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    verts = _labels(labels, d + 2, f"a standard {d}-sphere")
    out = build(list(combinations(verts, d + 1)))
    assert out.classify_pseudomanifold() == PSEUDOMANIFOLD
    assert out.face_profile().euler == (2 if d % 2 == 0 else 0)
    return out


def cycle(n: int, labels=None) -> Complex:
    """The n-vertex circle, the unique 1-dimensional n-vertex pseudomanifold."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    verts = _labels(labels, n, "a cycle")
    out = build([(verts[i], verts[(i + 1) % n]) for i in range(n)])
    assert out.classify_pseudomanifold() == PSEUDOMANIFOLD
    return out


def is_circle(complex_: Complex) -> bool:
    """Connected 1-dimensional closed weak pseudomanifold, i.e. some S^1_n."""
    return complex_.dim == 1 and complex_.classify_pseudomanifold() == PSEUDOMANIFOLD


def kuehnel_complex(d: int, labels=None) -> Complex:
    """Kuehnel's d-dimensional complex on the (2d+3)-cycle.

    Facets are the (d+1)-sets obtained by deleting one interior vertex from
    each path of d+2 consecutive cycle vertices; there are d*(2d+3) of them.
    That this is a combinatorial manifold is machine-checked here only for
    d = 2 (vertex links are circles) and d = 3 (vertex links are 2-spheres);
    higher d is left unverified.
    """
    if d < 2:
        raise ValueError("defined for d >= 2")
    n = 2 * d + 3
    verts = _labels(labels, n, "the cyclic base")
    facets = []
    for start in range(n):
        path = [verts[(start + k) % n] for k in range(d + 2)]
        for interior in range(1, d + 1):
            facets.append([v for k, v in enumerate(path) if k != interior])
    out = build(facets)
    assert len(out.facet_masks) == d * n
    assert out.n_vertices == n
    return out


def cyclic_complementary_complex(labels=None) -> Complex:
    """The 7-vertex 3-dimensional complementary weak pseudomanifold with
    boundary: facets are the Z_7 translates of {0, 3, 5, 6}.

    Construction re-checks complementarity, the boundary classification,
    that each edge is in exactly two facets, and that any two facets share
    exactly one edge.
    """
    verts = _labels(labels, 7, "the cyclic complementary complex")
    facets = [[verts[i % 7], verts[(i + 3) % 7], verts[(i + 5) % 7], verts[(i + 6) % 7]] for i in range(7)]
    out = build(facets)
    assert is_complementary(out)
    assert out.classify_pseudomanifold() == WEAK_PM_WITH_BOUNDARY
    assert cofacet_histogram(out, 1) == {2: comb(7, 2)}
    for f in out.facets:
        assert intersection_profile(out, f).by_overlap == {2: 6}
    return out


def _data_path(name: str) -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override) / name
    return Path(__file__).parent / "data" / name


def projective_plane_6(labels=None) -> Complex:
    """The 6-vertex triangulation of the real projective plane.

    Not hard-coded: the facet list is the persisted output of
    search_complementary(6, 2) (regenerate with
    `facetkit search-complementary --n 6 --d 2`), shipped with a content
    checksum and re-validated on every load: complementary, pseudomanifold,
    all vertex links circles, Euler characteristic 1, first homology Z/2.
    """
    path = _data_path("rp2_6.cplx")
    if not path.exists():
        raise FileNotFoundError(
            f"{path} missing; regenerate with: facetkit search-complementary --n 6 --d 2 -o <dir>"
        )
    out = load_complex(path)
    recorded = None
    for line in path.read_text().splitlines():
        if line.startswith("# sha256:"):
            recorded = line.split(":", 1)[1].strip()
    if recorded != facet_body_checksum(out):
        raise ValueError(f"{path} failed its checksum; regenerate it")
    if labels is not None:
        verts = _labels(labels, 6, "the projective plane")
        out = build([[verts[v] for v in f] for f in out.facets])
    assert is_complementary(out)
    assert out.classify_pseudomanifold() == PSEUDOMANIFOLD
    assert all(is_circle(out.link([v])) for v in out.vertices)
    assert out.face_profile().euler == 1
    h = homology(out)
    assert h.rank(1) == 0 and h.torsion(1) == (2,)
    assert h.rank(2) == 0 and h.torsion(2) == ()
    return out
