"""Integral homology against an independent mod-p rank oracle."""

import random
from fractions import Fraction

import pytest

from facetkit import (
    build,
    cycle,
    cyclic_complementary_complex,
    disjoint_union,
    homology,
    is_acyclic,
    kuehnel_complex,
    projective_plane_6,
    smith_normal_form,
    standard_sphere,
)
from facetkit.homology import boundary_matrix, is_zero_matrix, matmul


def det(mat):
    """Fraction-free enough for unimodularity checks: plain expansion via
    Gaussian elimination over exact rationals."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return result


def rank_mod_p(mat, p):
    rows = [[x % p for x in row] for row in mat if any(x % p for x in row)]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def betti_mod_p(complex_, p):
    """Oracle: reduced Betti numbers over GF(p) by straight rank computation."""
    d = complex_.dim
    ranks = [rank_mod_p(boundary_matrix(complex_, k), p) for k in range(d + 1)]
    ranks.append(0)
    counts = [len(complex_.faces_of_dim(k)) for k in range(d + 1)]
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(d + 1)]


def betti_mod_p_from_profile(profile, p, dim):
    """Universal-coefficients prediction from the integral answer."""
    out = []
    for k in range(dim + 1):
        tor_here = sum(1 for t in profile.torsion(k) if t % p == 0)
        tor_below = sum(1 for t in profile.torsion(k - 1) if t % p == 0) if k else 0
        out.append(profile.rank(k) + tor_here + tor_below)
    return out


SAMPLES = [
    standard_sphere(2),
    cycle(6),
    cyclic_complementary_complex(),
    kuehnel_complex(2),
    build([[0, 1, 2], [1, 2, 3], [3, 4]]),
    disjoint_union(cycle(3), standard_sphere(2, labels=[4, 5, 6, 7])),
]


def test_snf_known_matrix():
    u, d, v = smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]
    assert matmul(matmul(u, [[2, 4], [6, 8]]), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1


def test_snf_random_matrices():
    rng = random.Random(3)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        u, d, v = smith_normal_form(mat)
        assert matmul(matmul(u, mat), v) == d
        assert abs(det(u)) == 1 and abs(det(v)) == 1
        diag = [d[i][i] for i in range(min(m, n))]
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a != 0 and b % a == 0
        assert all(x >= 0 for x in diag)


def test_snf_of_every_sample_boundary_matrix():
    for complex_ in SAMPLES:
        for k in range(complex_.dim + 1):
            mat = boundary_matrix(complex_, k)
            if not mat or not mat[0]:
                continue
            u, d, v = smith_normal_form(mat)
            assert matmul(matmul(u, mat), v) == d
            assert abs(det(u)) == 1 and abs(det(v)) == 1


def test_boundary_of_boundary_zero():
    for complex_ in SAMPLES:
        for k in range(complex_.dim):
            prod = matmul(boundary_matrix(complex_, k), boundary_matrix(complex_, k + 1))
            assert is_zero_matrix(prod)


@pytest.mark.parametrize("d", range(5))
def test_sphere_homology(d):
    profile = homology(standard_sphere(d))
    for k in range(d + 1):
        assert profile.rank(k) == (1 if k == d else 0)
        assert profile.torsion(k) == ()


def test_projective_plane_homology():
    profile = homology(projective_plane_6())
    assert profile.groups == ((0, ()), (0, (2,)), (0, ()))


def test_cone_acyclic():
    base = cycle(5)
    cone = base.join(build([[9]]))
    assert is_acyclic(cone)
    assert is_acyclic(build([[0, 1, 2, 3]]))
    assert not is_acyclic(cycle(3))


def test_alternating_rank_sum_is_euler():
    for complex_ in SAMPLES + [projective_plane_6(), kuehnel_complex(3)]:
        profile = homology(complex_)
        unreduced = [profile.rank(k) + (1 if k == 0 else 0) for k in range(complex_.dim + 1)]
        alt = sum(r if k % 2 == 0 else -r for k, r in enumerate(unreduced))
        assert alt == complex_.face_profile().euler


def test_mod_p_oracle_agrees():
    for complex_ in SAMPLES + [projective_plane_6(), kuehnel_complex(3)]:
        profile = homology(complex_)
        for p in (2, 3, 5):
            assert betti_mod_p(complex_, p) == betti_mod_p_from_profile(
                profile, p, complex_.dim
            )
