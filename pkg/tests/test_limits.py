import random

import pytest

from posetprod.errors import PreconditionFailed
from posetprod.fixtures import BASE, fix_a, fix_b, fix_e, random_poset_with
from posetprod.limits import (
    PosetDiagram,
    check_diagram,
    cochain_complex,
    higher_limits,
    lim0_basis,
    verify_lower_factoring,
)
from posetprod.linalg import (
    QQ,
    FieldSpec,
    GradedLinearMap,
    GradedVectorSpace,
    truncated_polynomial,
)
from posetprod.poset import PointedPoset


def square_with_base():
    # two bottom objects, two top objects, all four comparabilities
    return PointedPoset(
        "* a b c d".split(),
        "*",
        [("*", "a"), ("*", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )


def test_indicator_dims_counted_right():
    P = fix_a()
    dia = PosetDiagram.indicator(P, ["3", "4"])
    cx = cochain_complex(dia)
    # only chains starting inside the up-set contribute
    live = [sum(1 for c in cs if c[0] in {"3", "4", "5", "6"}) for cs in cx.chains]
    assert live[0] == 4 and live[1] == 4 and live[2] == 0
    assert cx.spaces[0].dims == (4,)
    assert cx.spaces[1].dims == (4,)
    lims = higher_limits(dia)
    assert lims == [(1,), (1,)]


def test_higher_limits_weak_chain_cross_check():
    P = fix_a()
    dia = PosetDiagram.indicator(P, ["3", "4"])
    assert higher_limits(dia, weak=True, max_n=3) == [(1,), (1,)]
    with pytest.raises(PreconditionFailed):
        higher_limits(dia, weak=True)


def test_constant_diagram_is_acyclic():
    rng = random.Random(11)
    unit = GradedVectorSpace.unit(QQ, 0)
    for seed in range(8):
        P = random_poset_with(rng.randrange(10**6), "any", 1)[0]
        dia = PosetDiagram.constant(P, unit)
        lims = higher_limits(dia)
        assert lims[0] == (1,)
        assert all(all(v == 0 for v in l) for l in lims[1:])


def test_restriction_to_up_set_matches_indicator():
    rng = random.Random(23)
    unit = GradedVectorSpace.unit(QQ, 0)
    for seed in range(6):
        P = random_poset_with(rng.randrange(10**6), "any", 1)[0]
        objs = sorted(set(P.objects) - {P.base}, key=str)
        if not objs:
            continue
        gens = rng.sample(objs, min(len(objs), rng.randrange(1, 3)))
        U = set()
        for g in gens:
            U |= P.up_set(g)
        ind = higher_limits(PosetDiagram.indicator(P, gens))
        direct = higher_limits(PosetDiagram.constant(P, unit), objects=U)
        n = max(len(ind), len(direct))
        pad = lambda l: l + [(0,)] * (n - len(l))
        assert pad(ind) == pad(direct)


def test_graded_diagram_over_a_chain():
    P = PointedPoset(["*", "v"], "*", [("*", "v")])
    m, aug = truncated_polynomial("v", 1, 3)
    unit = GradedVectorSpace.unit(QQ, 3)
    dia = PosetDiagram(P, {"*": unit, "v": m}, {("*", "v"): aug})
    assert check_diagram(dia) == []
    lims = higher_limits(dia)
    assert lims == [(1, 1, 1, 1)]


def test_lim0_basis_labels():
    P = square_with_base()
    unit = GradedVectorSpace.unit(QQ, 0)
    dia = PosetDiagram.constant(P, unit)
    [(labels, vecs)] = lim0_basis(dia)
    assert len(vecs) == 1
    assert len(labels) == 5
    # the compatible family is constant across all five objects
    v = vecs[0]
    assert all(x == v[0] for x in v)


def test_check_diagram_reports_noncommuting_square():
    P = square_with_base()
    unit = GradedVectorSpace.unit(QQ, 0)
    one = GradedLinearMap.identity(unit)
    minus = GradedLinearMap(unit, unit, [[[-1]]])
    maps = {c: one for c in P.covers}
    maps[("a", "c")] = minus
    dia = PosetDiagram(P, {x: unit for x in P.objects}, maps)
    problems = check_diagram(dia)
    assert any("disagree" in p for p in problems)
    # and the honest version passes
    dia2 = PosetDiagram.constant(P, unit)
    assert check_diagram(dia2) == []


def test_check_diagram_reports_shape_and_key_problems():
    P = PointedPoset(["*", "v"], "*", [("*", "v")])
    unit = GradedVectorSpace.unit(QQ, 0)
    big = GradedVectorSpace(QQ, (2,))
    dia = PosetDiagram(P, {"*": unit, "v": unit}, {})
    assert any("missing map" in p for p in check_diagram(dia))
    dia = PosetDiagram(
        P,
        {"*": unit, "v": unit},
        {("*", "v"): GradedLinearMap.identity(unit), ("v", "*"): GradedLinearMap.identity(unit)},
    )
    assert any("non-cover" in p for p in check_diagram(dia))
    dia = PosetDiagram(P, {"*": unit, "v": big}, {("*", "v"): GradedLinearMap.identity(unit)})
    assert any("wrong shape" in p for p in check_diagram(dia))


def test_composite_identity_and_error():
    P = square_with_base()
    unit = GradedVectorSpace.unit(QQ, 0)
    dia = PosetDiagram.constant(P, unit)
    assert dia.composite("a", "a").is_identity()
    assert dia.composite("*", "c").is_identity()
    with pytest.raises(PreconditionFailed):
        dia.composite("c", "a")


def test_delta_squares_to_zero_on_seeded_diagrams():
    rng = random.Random(31)
    for seed in range(6):
        P = random_poset_with(rng.randrange(10**6), "any", 1)[0]
        objs = sorted(set(P.objects) - {P.base}, key=str)
        gens = rng.sample(objs, min(2, len(objs))) if objs else []
        dia = PosetDiagram.indicator(P, gens, D=1)
        cochain_complex(dia, check=True)
        cochain_complex(dia, weak=True, max_n=3, check=True)


def test_weak_equals_strict_on_seeded_indicators():
    rng = random.Random(47)
    for seed in range(5):
        P = random_poset_with(rng.randrange(10**6), "any", 1)[0]
        objs = sorted(set(P.objects) - {P.base}, key=str)
        gens = rng.sample(objs, min(2, len(objs))) if objs else []
        dia = PosetDiagram.indicator(P, gens)
        strict = higher_limits(dia)
        weak = higher_limits(dia, weak=True, max_n=len(strict) + 1)
        n = max(len(strict), len(weak))
        pad = lambda l: l + [(0,)] * (n - len(l))
        assert pad(strict) == pad(weak)


def test_field_does_not_change_indicator_limits():
    P = fix_a()
    for f in (QQ, FieldSpec.Fp(2), FieldSpec.Fp(101)):
        dia = PosetDiagram.indicator(P, ["3", "4"], field=f)
        assert higher_limits(dia) == [(1,), (1,)]


def test_verify_lower_factoring():
    assert verify_lower_factoring(fix_a()) == ("3", "4", "5")
    assert verify_lower_factoring(fix_b()) is None
    assert verify_lower_factoring(fix_e()) is None
