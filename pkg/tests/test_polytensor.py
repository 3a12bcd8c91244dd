import random

import pytest

from posetprod.errors import IndexMismatch, MissingSection
from posetprod.fixtures import cube, fix_a, fix_b, fix_c, fix_e, random_poset_with
from posetprod.limits import check_diagram, higher_limits
from posetprod.linalg import QQ, FieldSpec, GradedLinearMap, GradedVectorSpace
from posetprod.polytensor import (
    MorphismCollection,
    build_T,
    build_section_S,
    polyhedral_tensor,
    random_surjective_collection,
    reduction_invariance,
)
from posetprod.poset import PointedPoset


def test_parallel_edge_poset_augmentation_dims():
    # two vertices, two tops over both: the mixed monomials are carried
    # twice, once per top, so degree d holds 2d classes for d >= 1
    P = fix_b()
    col = MorphismCollection.augmentation(P.vertices, D=3)
    lims = polyhedral_tensor(P, col)
    assert lims == [(1, 2, 4, 6)]


def test_parallel_edge_poset_circle_dims():
    P = fix_b()
    col = MorphismCollection.circle(P.vertices, D=2)
    lims = polyhedral_tensor(P, col)
    assert lims == [(1, 2, 2)]


def test_double_square_poset_sees_level_one():
    # the two-layer double edge is not lower saturated; the mixed component
    # only lives on the four tops, which glue like a circle
    P = fix_a()
    col = MorphismCollection.augmentation(P.vertices, D=2)
    lims = polyhedral_tensor(P, col)
    assert lims == [(1, 2, 3), (0, 0, 1)]


def test_build_T_shapes_and_labels():
    P = fix_b()
    col = MorphismCollection.augmentation(P.vertices, D=2)
    dia = build_T(P, col)
    assert check_diagram(dia) == []
    assert dia.spaces["c"].dims == (1, 2, 3)
    assert dia.spaces["a"].dims == (1, 1, 1)
    assert dia.spaces[P.base].dims == (1, 0, 0)
    # degree-2 basis of the top object names both generators
    assert dia.spaces["c"].labels[2] == (("1", "b^2"), ("a^1", "b^1"), ("a^2", "1"))


def test_vertex_order_does_not_change_limits():
    P = fix_c()
    col = MorphismCollection.augmentation(P.vertices, D=2)
    default = higher_limits(build_T(P, col))
    flipped = higher_limits(build_T(P, col, vertex_order=list(reversed(sorted(P.vertices)))))
    assert default == flipped


def test_index_mismatch_errors():
    P = fix_b()
    col = MorphismCollection.augmentation(["a", "b", "z"], D=1)
    with pytest.raises(IndexMismatch):
        build_T(P, col)
    col2 = MorphismCollection.augmentation(P.vertices, D=1)
    with pytest.raises(IndexMismatch):
        build_T(P, col2, vertex_order=["a", "a"])
    with pytest.raises(IndexMismatch):
        MorphismCollection(
            {
                "a": MorphismCollection.augmentation(["a"], D=1).maps["a"],
                "b": MorphismCollection.augmentation(["b"], D=2).maps["b"],
            }
        )


def test_sections_split_the_structure_maps():
    P = fix_c()
    col = MorphismCollection.augmentation(P.vertices, D=2)
    S = build_section_S(P, col)
    assert set(S) == set(P.covers)


def test_missing_section_detected():
    unit = GradedVectorSpace.unit(QQ, 1)
    dead = GradedLinearMap(unit, unit, [[[0]], []])
    col = MorphismCollection({"v": dead})
    P = PointedPoset(["*", "v"], "*", [("*", "v")])
    with pytest.raises(MissingSection):
        build_section_S(P, col)
    good = MorphismCollection.augmentation(["v"], D=1)
    with pytest.raises(MissingSection):
        good.section_maps({"v": GradedLinearMap.zero(unit, good.source("v"))})


def test_higher_limits_vanish_for_lower_saturated_posets():
    rng = random.Random(2026)
    posets = random_poset_with(9001, "lower_saturated", 6)
    for P in posets:
        col = random_surjective_collection(rng, P.vertices, D=2)
        lims = polyhedral_tensor(P, col)
        assert all(all(v == 0 for v in l) for l in lims[1:]), (P.to_dict(), lims)


def test_level_zero_matches_split_subspace_dims():
    # with a section around, level 0 is the whole compatible family space;
    # spot check against the weak-chain computation
    P = fix_c()
    col = MorphismCollection.circle(P.vertices, D=2)
    strict = polyhedral_tensor(P, col)
    weak = polyhedral_tensor(P, col, weak=True, max_n=3)
    assert strict == weak


def test_reduction_keeps_limits_on_polyhedral_posets():
    # doubling an object above itself keeps the poset polyhedral and must
    # not change the limits
    rng = random.Random(77)
    for P in random_poset_with(515, "polyhedral", 4):
        objs = sorted(set(P.objects) - {P.base}, key=str)
        if not objs:
            continue
        x = rng.choice(objs)
        xx = x + "'"
        covers = list(P.covers) + [(x, xx)] + [(xx, u) for u in sorted(P.up_set(x) - {x}, key=str)]
        Q = PointedPoset(list(P.objects) + [xx], P.base, covers)
        col = MorphismCollection.augmentation(Q.vertices, D=2)
        lims, lims_r, same = reduction_invariance(Q, col)
        assert same, (Q.to_dict(), lims, lims_r)


def test_reduction_can_change_limits_without_polyhedrality():
    P = fix_a()
    col = MorphismCollection.augmentation(P.vertices, D=2)
    lims, lims_r, same = reduction_invariance(P, col)
    assert not same
    assert lims_r == [(1, 2, 3)]


def test_one_object_poset_tensor():
    P = PointedPoset(["*"], "*", [])
    col = MorphismCollection({}, field=QQ, truncation=2)
    lims = polyhedral_tensor(P, col)
    assert lims == [(1, 0, 0)]


def test_field_choice_spot_check():
    P = fix_b()
    for f in (QQ, FieldSpec.Fp(101)):
        col = MorphismCollection.augmentation(P.vertices, D=3, field=f)
        assert polyhedral_tensor(P, col) == [(1, 2, 4, 6)]


def test_cube_augmentation_matches_vertex_count():
    # cube posets are simplicial in low dimensions only for the 1-cube;
    # either way degree 1 of level 0 counts the vertices
    for n in (1, 2):
        P = cube(n)
        col = MorphismCollection.augmentation(P.vertices, D=1)
        lims = polyhedral_tensor(P, col)
        assert lims[0][1] == len(P.vertices)
        assert all(all(v == 0 for v in l) for l in lims[1:])
