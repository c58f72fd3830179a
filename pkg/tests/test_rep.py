"""Representation builders against the published matrix displays."""

import pytest

from lkbmw import linalg
from lkbmw.rep import (build_matrices, build_matrices_recursive, nu_action,
                       nu_e_action, nu_inv_action, verify_relations)
from lkbmw.rings import FieldElement, Specialization, specialize
from lkbmw.roots import RootIndex, all_roots

GEN = Specialization.generic().field()
L = FieldElement.l()
R = FieldElement.r()


def grid(rows):
    """Evaluate a table of terse entry expressions into a matrix."""
    ns = {"l": L, "r": R, "m": GEN.m(), "x": GEN.x()}
    out = []
    for row in rows:
        out.append([e if isinstance(e, FieldElement)
                    else (FieldElement.from_int(e) if isinstance(e, int)
                          else _ev(e, ns))
                    for e in row])
    return out


def _ev(expr, ns):
    v = eval(expr, {"__builtins__": {}}, ns)  # noqa: S307 - test fixture
    return FieldElement.from_int(v) if isinstance(v, int) else v


G1_3 = grid([
    ["1/l", "m", 0],
    [0, "-m", 1],
    [0, 1, 0],
])

G2_3 = grid([
    [0, 0, 1],
    [0, "1/l", "m/l"],
    [1, 0, "-m"],
])

G1_4 = grid([
    ["1/l", "m", 0, 0, "m*r", 0],
    [0, "-m", 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, "r", 0, 0],
    [0, 0, 0, 0, "-m", 1],
    [0, 0, 0, 0, 1, 0],
])

G2_4 = grid([
    [0, 0, 1, 0, 0, 0],
    [0, "1/l", "m/l", "m", 0, 0],
    [1, 0, "-m", 0, 0, 0],
    [0, 0, 0, "-m", 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, "r"],
])

G3_4 = grid([
    ["r", 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, "1/l", "m/l", "m/(l*r)"],
    [0, 1, 0, 0, "-m", 0],
    [0, 0, 1, 0, 0, "-m"],
])

G1_5 = grid([
    ["1/l", "m", 0, 0, "m*r", 0, 0, 0, "m*r**2", 0],
    [0, "-m", 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, "r", 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, "-m", 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, "r", 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, "r", 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, "-m", 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
])

G2_5 = grid([
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, "1/l", "m/l", "m", 0, 0, 0, "m*r", 0, 0],
    [1, 0, "-m", 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, "-m", 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, "r", 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, "r", 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, "-m", 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, "r"],
])

G3_5 = grid([
    ["r", 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, "1/l", "m/l", "m/(l*r)", "m", 0, 0, 0],
    [0, 1, 0, 0, "-m", 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, "-m", 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, "-m", 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, "r", 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, "r"],
])

G4_5 = grid([
    ["r", 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, "r", 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, "r", 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, "1/l", "m/l", "m/(l*r)", "m/(l*r**2)"],
    [0, 0, 0, 1, 0, 0, 0, "-m", 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, "-m", 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, "-m"],
])


def test_golden_matrices_three_strands():
    mats = build_matrices(3)
    assert linalg.mat_eq(mats.G[0], G1_3)
    assert linalg.mat_eq(mats.G[1], G2_3)


def test_golden_matrices_four_strands():
    mats = build_matrices(4)
    assert linalg.mat_eq(mats.G[0], G1_4)
    assert linalg.mat_eq(mats.G[1], G2_4)
    assert linalg.mat_eq(mats.G[2], G3_4)


def test_golden_matrices_five_strands():
    mats = build_matrices(5)
    for got, want in zip(mats.G, (G1_5, G2_5, G3_5, G4_5)):
        assert linalg.mat_eq(got, want)


def test_det_of_every_five_strand_generator():
    mats = build_matrices(5)
    expect = -(R ** 3) / L
    for g in mats.G:
        assert linalg.det(g, GEN) == expect


# -- the case formulas pointwise ---------------------------------------------

def test_nu_action_adjacent_example():
    col = nu_action(3, 1, RootIndex(2, 3, 3))
    m = GEN.m()
    assert col == {RootIndex(1, 3, 3): GEN.one(),
                   RootIndex(1, 2, 3): m,
                   RootIndex(2, 3, 3): -m}


def test_nu_action_disjoint_is_r():
    col = nu_action(4, 3, RootIndex(1, 2, 4))
    assert col == {RootIndex(1, 2, 4): R}


def test_nu_action_tall_column():
    col = nu_action(5, 4, RootIndex(1, 5, 5))
    m = GEN.m()
    assert col == {RootIndex(1, 4, 5): GEN.one(),
                   RootIndex(4, 5, 5): m / (L * R ** 2),
                   RootIndex(1, 5, 5): -m}


def test_nu_e_action_examples():
    assert nu_e_action(3, 1, RootIndex(1, 2, 3)) == {
        RootIndex(1, 2, 3): GEN.x()}
    assert nu_e_action(3, 2, RootIndex(1, 3, 3)) == {
        RootIndex(2, 3, 3): 1 / L}


def test_nu_inverse_inverts():
    n = 5
    mats = build_matrices(n)
    ident = linalg.identity(mats.size, GEN)
    for g, ginv in zip(mats.G, mats.Ginv):
        assert linalg.mat_eq(linalg.mat_mul(g, ginv), ident)
        assert linalg.mat_eq(linalg.mat_mul(ginv, g), ident)


def test_nu_inv_action_matches_matrix_inverse():
    n = 4
    mats = build_matrices(n)
    for i in range(1, n):
        for beta in all_roots(n):
            col = nu_inv_action(n, i, beta)
            dense = [GEN.zero()] * mats.size
            for root, c in col.items():
                dense[root.position() - 1] = c
            assert dense == [mats.Ginv[i - 1][a][beta.position() - 1]
                             for a in range(mats.size)]


# -- recursive block builder --------------------------------------------------

@pytest.mark.parametrize("n", [4, 5])
def test_recursive_builder_matches_closed_form(n):
    a = build_matrices(n)
    b = build_matrices_recursive(n)
    for x, y in zip(a.G + a.E + a.Ginv, b.G + b.E + b.Ginv):
        assert linalg.mat_eq(x, y)


def test_recursive_corner_entry():
    mats = build_matrices_recursive(5)
    assert mats.G[0][0][8] == GEN.m() * R ** 2


# -- relations ----------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4])
def test_relations_generic(n):
    report = verify_relations(build_matrices(n))
    assert report.all_pass, report.failures


def test_relations_specialized():
    spec = Specialization.l_to(-(R ** 3))
    report = verify_relations(build_matrices(4, spec))
    assert report.all_pass, report.failures


def test_relations_quotient_field():
    spec = Specialization.l_to_mod(-(R ** 3), 12)
    report = verify_relations(build_matrices(3, spec))
    assert report.all_pass, report.failures


def test_eigen_relation():
    # (G - l^{-1}) (G^2 + m G - 1) = 0
    mats = build_matrices(4)
    ident = linalg.identity(mats.size, GEN)
    m = GEN.m()
    for g in mats.G:
        a = linalg.mat_sub(g, linalg.mat_scale(ident, 1 / L))
        b = linalg.mat_sub(
            linalg.mat_add(linalg.mat_mul(g, g), linalg.mat_scale(g, m)),
            ident)
        prod = linalg.mat_mul(a, b)
        assert all(e.is_zero() for row in prod for e in row)


@pytest.mark.parametrize("lval", ["r", "-r^3", "1/r^2"])
def test_specialize_commutes_with_build(lval):
    # entry-wise specialization of the symbolic matrices equals direct
    # construction over the target field
    n = 4
    spec = Specialization.l_to(lval)
    generic = build_matrices(n)
    direct = build_matrices(n, spec)
    for gg, dd in zip(generic.G + generic.E, direct.G + direct.E):
        for grow, drow in zip(gg, dd):
            assert [specialize(e, spec) for e in grow] == drow


def test_relations_seven_strands_specialized():
    spec = Specialization.l_to(R)
    report = verify_relations(build_matrices(7, spec))
    assert report.all_pass, report.failures
